#pragma once

#include <optional>
#include <vector>

#include "intpart/graph.hpp"
#include "intpart/partition.hpp"
#include "intpart/vertex_set.hpp"

namespace intpart {

// Hard input-size ceilings for the exhaustive checks; exceeding them is an
// error (SizeLimitError), never a silent truncation.
struct OracleLimits {
    int max_n_partition = 24;
    int max_set_degeneracy = 20;
};

// Exhaustively scans the 2^(n-1)-1 nontrivial splits with vertex 0 pinned to
// side A, in ascending-bitmask order, and returns the first (a,b)-internal
// partition found, or nullopt if none exists.
std::optional<Partition> brute_force_partition(const Graph& g, const DemandFunctions& dem,
                                               const OracleLimits& limits = {});

// Checks every non-empty K ⊆ S directly for a vertex with deg_K(v) <= f(v).
bool brute_force_degenerate(const Graph& g, const VertexSet& s,
                            const std::vector<int>& f, const OracleLimits& limits = {});

// Checks every 4-vertex subset; guarded at n <= 64.
bool brute_force_four_sparse(const Graph& g);

}  // namespace intpart
