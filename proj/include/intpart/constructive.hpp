#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "intpart/graph.hpp"
#include "intpart/partition.hpp"
#include "intpart/vertex_set.hpp"

namespace intpart {

enum class StepKind : std::uint8_t { absorb, shrink, shed_pair };

struct SearchStep {
    StepKind kind;
    int x = -1;  // absorbed vertex, or the below-demand vertex of the triangle
    int y = -1;  // shrink: the removed exact-demand vertex; shed: pair member
    int z = -1;
    int stripped = 0;  // shrink only: further vertices peeled after removing y
    long long delta_w = 0;
    long long w_after = 0;
    int a_size_after = 0;
    // Diagnostics for shed steps: whether y or z had further neighbors at
    // exact demand besides each other (never happens on 4-sparse inputs).
    bool clean_shed = true;
};

struct SearchState {
    VertexSet a;
    long long w = 0;
    std::vector<SearchStep> trace;
};

struct LowDegreeSets {
    VertexSet c;  // vertices of A exactly at demand: d_A(v) = a(v)
    VertexSet d;  // vertices of B strictly below demand: d_B(v) <= b(v)-1
};

LowDegreeSets low_degree_sets(const Graph& g, const VertexSet& a,
                              const DemandFunctions& dem);

// Starting set: an inclusion-minimal a-internal subset, then any vertex with
// d_A(x) < a(x) stripped (a no-op on an internal set).
SearchState initialize_search(const Graph& g, const DemandFunctions& dem);

struct ConstructiveOptions {
    bool force = false;            // skip the 4-sparsity gate
    bool check_invariants = true;  // re-check state invariants after every step
};

// One move of the main loop, tried in order:
//   absorb — some below-demand vertex x of B joins A if A∪x stays
//            a-degenerate (w rises by at least 2);
//   shrink — some exact-demand vertex y leaves A while A\y still contains a
//            non-empty a-internal subset, which A collapses to (w never
//            drops, |A| strictly falls); this locally restores the
//            smallest-|A| side condition the shed case depends on;
//   shed   — an adjacent exact-demand pair y,z sharing a common below-demand
//            neighbor x leaves A (w rises by exactly 2 on 4-sparse inputs).
// Requires the loop guard (V\A is (b-1)-degenerate) to hold. Throws
// DichotomyFailureError when no move exists or a state invariant breaks;
// on 4-sparse inputs with a,b >= 2 and d = a+b that cannot happen.
SearchStep loop_step(const Graph& g, SearchState& state, const DemandFunctions& dem,
                     const ConstructiveOptions& opts = {});

// Grows the disjoint internal pair (a_star, b_star) into a total partition:
// unassigned vertices join A while they meet demand there, the rest join B.
// Requires d(x) >= a(x)+b(x) for every x.
Partition extend_internal_pair(const Graph& g, const VertexSet& a_star,
                               const VertexSet& b_star, const DemandFunctions& dem);

struct ConstructiveResult {
    Partition partition;
    std::vector<SearchStep> trace;
    long long initial_w = 0;
    int initial_a_size = 0;
    long long final_w = 0;
};

// Full solver for 4-sparse graphs with a(x), b(x) >= 2 and d(x) = a(x)+b(x):
// initialize, loop until V\A is no longer (b-1)-degenerate, then extract the
// maximal internal subsets of both sides and extend them to a verified
// partition.
ConstructiveResult find_internal_partition_4sparse(const Graph& g,
                                                   const DemandFunctions& dem,
                                                   const ConstructiveOptions& opts = {});

// One JSON object per step, in order.
void write_trace_jsonl(std::ostream& out, const std::vector<SearchStep>& trace);

}  // namespace intpart
