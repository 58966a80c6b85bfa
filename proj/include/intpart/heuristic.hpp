#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "intpart/graph.hpp"
#include "intpart/partition.hpp"

namespace intpart {

struct HeuristicConfig {
    std::uint64_t seed = 0;
    int max_iters = -1;      // -1: 50*n
    int balance_slack = -1;  // -1: ceil(log base mean-degree of n), at least 1
    bool record_trace = false;
};

enum class IterKind : std::uint8_t {
    switch_move,    // best violating vertex switched, objective did not increase
    balance_kick,   // size constraint violated: random vertex moved big -> small
    plateau_kick,   // no non-worsening switch existed: random vertex moved off
                    // the larger side
};

struct IterRecord {
    IterKind kind;
    int vertex;
    long long objective_after;
};

struct HeuristicResult {
    std::optional<Partition> partition;  // present iff converged
    int iterations = 0;
    bool converged = false;
    long long final_objective = 0;
    std::vector<IterRecord> trace;  // filled when cfg.record_trace
};

// Total unmet demand: sum over x in A of (a(x)-d_A(x))+ plus sum over x in B
// of (b(x)-d_B(x))+. Zero iff the partition is (a,b)-internal, provided both
// sides are non-empty.
long long objective_violation(const Graph& g, const Partition& p,
                              const DemandFunctions& dem);

int default_balance_slack(const Graph& g);
int resolved_max_iters(const HeuristicConfig& cfg, int n);

// Seeded local search over near-balanced partitions: start from a random
// balanced split; while the side sizes drift beyond the slack, kick a random
// vertex from the big side to the small one; otherwise switch the violating
// vertex whose switch lowers the objective the most. Switches that would
// increase the objective or empty a side are never taken; when none is
// available the iteration kicks a random vertex off the larger side instead.
// Stops at objective zero (converged) or after max_iters iterations.
HeuristicResult local_search(const Graph& g, const DemandFunctions& dem,
                             const HeuristicConfig& cfg);

}  // namespace intpart
