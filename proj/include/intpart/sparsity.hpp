#pragma once

#include <array>
#include <optional>

#include "intpart/graph.hpp"

namespace intpart {

// Four vertices spanning five or more edges, if any exist. Any such 4-set
// contains an edge with two common neighbors, so the scan walks each edge
// (u,v) and intersects the two sorted adjacency lists; the witness is
// {u, v, w1, w2} with w1, w2 common neighbors.
std::optional<std::array<int, 4>> find_dense_four_set(const Graph& g);

// True iff every 4-vertex subset spans at most four edges.
bool is_four_sparse(const Graph& g);

}  // namespace intpart
