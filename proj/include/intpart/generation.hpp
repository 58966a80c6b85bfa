#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "intpart/graph.hpp"

namespace intpart {

enum class RegularMethod {
    // Uniform random pairing of the n*d half-edge stubs; the whole draw is
    // rejected and redrawn while the projected multigraph has loops or
    // parallel edges, so accepted samples are uniform over simple d-regular
    // graphs. Expected attempts grow like exp((d-1)/2 + (d-1)^2/4); practical
    // only for small d (roughly d <= 6).
    rejection,
    // Pairing that joins only currently-suitable stub pairs (distinct
    // endpoints, edge not yet present) and restarts when stuck. Asymptotically
    // uniform and practical for larger d.
    pairing,
};

RegularMethod parse_regular_method(const std::string& name);
std::string regular_method_name(RegularMethod m);

// Picks rejection for d <= 6, pairing above.
RegularMethod auto_regular_method(int d);

struct GenSpec {
    int n = 0;
    int d = 0;
    std::uint64_t seed = 0;
    int max_attempts = 1000;
    RegularMethod method = RegularMethod::rejection;
};

// Random d-regular simple graph. Deterministic given the spec. Throws
// ParityError when n*d is odd, std::invalid_argument when d is out of range,
// AttemptsExhaustedError when max_attempts draws were all rejected.
Graph random_regular(const GenSpec& spec);

// Fixed catalog: "complete" k; "complete_bipartite" k l; "cycle" k;
// "circulant" k o1 [o2 ...]; "petersen". Canonical vertex numbering.
Graph named_graph(const std::string& name, const std::vector<int>& params = {});

}  // namespace intpart
