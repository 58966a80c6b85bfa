#pragma once

#include <utility>
#include <vector>

#include "intpart/graph.hpp"
#include "intpart/vertex_set.hpp"

namespace intpart {

std::vector<int> uniform_thresholds(int n, int value);

// f + delta pointwise; values may go negative (a threshold below 0 never
// removes anything).
std::vector<int> shifted(std::vector<int> f, int delta);

struct PeelResult {
    // Survivors: the unique maximal subset of the input in which every vertex
    // keeps more than f(v) neighbors.
    VertexSet core;
    // (vertex, degree inside the surviving set at the moment of removal), in
    // removal order.
    std::vector<std::pair<int, int>> order;
};

// Repeatedly removes from S any vertex v with deg(v) <= f(v) inside the
// current set until none remains. The core is removal-order independent; the
// trace is made deterministic by always removing the candidate with the
// smallest id.
PeelResult peel_core(const Graph& g, const VertexSet& s, const std::vector<int>& f);

// Same, but "smallest" is judged by rank[v]; used to exercise order
// independence. rank must be a permutation-like vector of distinct keys.
PeelResult peel_core(const Graph& g, const VertexSet& s, const std::vector<int>& f,
                     const std::vector<int>& rank);

// True iff every non-empty K ⊆ S has a vertex with deg_K(v) <= f(v);
// equivalently, peeling at threshold f dismantles S completely.
bool is_degenerate(const Graph& g, const VertexSet& s, const std::vector<int>& f);

// The unique maximal T ⊆ S with deg_T(v) >= f(v) for all v in T (possibly
// empty); computed as the peel core at threshold f-1.
VertexSet maximal_internal_subset(const Graph& g, const VertexSet& s,
                                  const std::vector<int>& f);

// An inclusion-minimal non-empty A with deg_A(v) >= f(v) for all v in A:
// start from the maximal such subset of V and shrink while some single
// deletion still leaves a non-empty one. Throws NoInternalSubsetError when V
// has no such subset at all.
VertexSet minimal_internal_subset(const Graph& g, const std::vector<int>& f);

}  // namespace intpart
