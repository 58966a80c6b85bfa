#include <doctest.h>

#include <cmath>
#include <map>

#include "intpart/errors.hpp"
#include "intpart/generation.hpp"
#include "intpart/graph.hpp"
#include "test_util.hpp"

using namespace intpart;
using namespace testutil;

TEST_SUITE("generation") {

TEST_CASE("random_regular produces simple d-regular graphs, deterministically") {
    for (auto method : {RegularMethod::rejection, RegularMethod::pairing}) {
        GenSpec spec;
        spec.n = 10;
        spec.d = 3;
        spec.seed = 1;
        spec.method = method;
        Graph g = random_regular(spec);
        CHECK(g.n() == 10);
        CHECK(g.m() == 15);
        for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) == 3);
        Graph again = random_regular(spec);
        CHECK(again.edges() == g.edges());
        spec.seed = 2;
        Graph other = random_regular(spec);
        CHECK(other.edges() != g.edges());
    }
}

TEST_CASE("random_regular rejects bad specs") {
    GenSpec odd;
    odd.n = 5;
    odd.d = 3;
    CHECK_THROWS_AS(random_regular(odd), ParityError);
    GenSpec too_dense;
    too_dense.n = 4;
    too_dense.d = 4;
    CHECK_THROWS_AS(random_regular(too_dense), std::invalid_argument);
    GenSpec no_budget;
    no_budget.n = 8;
    no_budget.d = 3;
    no_budget.max_attempts = 0;
    CHECK_THROWS_AS(random_regular(no_budget), std::invalid_argument);
}

TEST_CASE("rejection with max_attempts 1 fails for some seed") {
    // About 86% of single pairings of an (8,3) spec are non-simple, so some
    // seed among the first hundred must exhaust a one-attempt budget.
    bool exhausted = false;
    for (std::uint64_t seed = 0; seed < 100 && !exhausted; ++seed) {
        GenSpec spec;
        spec.n = 8;
        spec.d = 3;
        spec.seed = seed;
        spec.max_attempts = 1;
        try {
            random_regular(spec);
        } catch (const AttemptsExhaustedError&) {
            exhausted = true;
        }
    }
    CHECK(exhausted);
}

TEST_CASE("pairing handles degrees where rejection cannot") {
    GenSpec spec;
    spec.n = 30;
    spec.d = 20;
    spec.seed = 9;
    spec.method = RegularMethod::pairing;
    Graph g = random_regular(spec);
    for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) == 20);
}

TEST_CASE("d can be zero or n-1") {
    GenSpec empty;
    empty.n = 6;
    empty.d = 0;
    CHECK(random_regular(empty).m() == 0);
    GenSpec full;
    full.n = 6;
    full.d = 5;
    full.method = RegularMethod::pairing;
    Graph g = random_regular(full);
    CHECK(g.m() == 15);  // only K6 is 5-regular on 6 vertices
}

TEST_CASE("edge frequencies are uniform across vertex pairs (3 sigma proxy)") {
    // Exchangeability makes every pair equally likely, with probability
    // d/(n-1). Frozen seed; the bound is statistical, the test is not.
    const int n = 8, d = 3, samples = 4000;
    std::map<std::pair<int, int>, int> counts;
    for (int s = 0; s < samples; ++s) {
        GenSpec spec;
        spec.n = n;
        spec.d = d;
        spec.seed = 100000 + static_cast<std::uint64_t>(s);
        Graph g = random_regular(spec);
        for (auto e : g.edges()) counts[e]++;
    }
    const double p = static_cast<double>(d) / (n - 1);
    const double sigma = std::sqrt(p * (1 - p) * samples);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double deviation = std::abs(counts[{u, v}] - p * samples);
            CHECK(deviation <= 3.0 * sigma);
        }
}

TEST_CASE("named graphs have the expected shapes") {
    Graph petersen = named_graph("petersen");
    CHECK(petersen.n() == 10);
    CHECK(petersen.m() == 15);
    for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
    CHECK(petersen.has_edge(0, 5));
    CHECK(petersen.has_edge(5, 7));
    CHECK(!petersen.has_edge(5, 6));

    Graph k4 = named_graph("complete", {4});
    CHECK(k4.n() == 4);
    CHECK(k4.m() == 6);

    Graph k33 = named_graph("complete_bipartite", {3, 3});
    CHECK(k33.n() == 6);
    CHECK(k33.m() == 9);
    CHECK(!k33.has_edge(0, 1));
    CHECK(k33.has_edge(0, 3));

    Graph c6 = named_graph("cycle", {6});
    CHECK(c6.m() == 6);
    CHECK(c6.has_edge(5, 0));

    Graph c913 = named_graph("circulant", {9, 1, 3});
    CHECK(c913.m() == 18);
    for (int v = 0; v < 9; ++v) CHECK(c913.degree(v) == 4);

    // offset k/2 contributes one edge per pair, not two
    Graph c62 = named_graph("circulant", {6, 3});
    CHECK(c62.m() == 3);
}

TEST_CASE("named graph errors") {
    CHECK_THROWS_AS(named_graph("moebius"), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("cycle", {2}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("cycle", {}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("circulant", {9}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("circulant", {9, 0}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("circulant", {9, 5}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("circulant", {9, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("petersen", {1}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("complete_bipartite", {3}), std::invalid_argument);
}

}  // TEST_SUITE
