#include <doctest.h>

#include "intpart/degeneracy.hpp"
#include "intpart/errors.hpp"
#include "intpart/generation.hpp"
#include "intpart/oracle.hpp"
#include "test_util.hpp"

using namespace intpart;
using namespace testutil;

namespace {

// Independent reference for small n: try every split directly through the
// verifier, in the same canonical order the oracle promises.
std::optional<Partition> naive_first_partition(const Graph& g, const DemandFunctions& dem) {
    const int n = g.n();
    if (n < 2) return std::nullopt;
    for (std::uint32_t mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
        VertexSet a(n);
        a.add(0);
        for (int v = 1; v < n; ++v)
            if (mask & (1u << (v - 1))) a.add(v);
        Partition p = Partition::from_a_set(a);
        if (verify_internal(g, p, dem).ok) return p;
    }
    return std::nullopt;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("the forbidden regular graphs have no internal partition") {
    Graph k4 = named_graph("complete", {4});
    CHECK(!brute_force_partition(k4, DemandFunctions::half_ceiling(k4)).has_value());
    Graph k5 = named_graph("complete", {5});
    CHECK(!brute_force_partition(k5, DemandFunctions::half_ceiling(k5)).has_value());
    Graph k33 = named_graph("complete_bipartite", {3, 3});
    CHECK(!brute_force_partition(k33, DemandFunctions::half_ceiling(k33)).has_value());
}

TEST_CASE("petersen and C6 have one, found in canonical order") {
    Graph petersen = named_graph("petersen");
    auto found = brute_force_partition(petersen, DemandFunctions::half_ceiling(petersen));
    REQUIRE(found.has_value());
    CHECK(verify_internal(petersen, *found, DemandFunctions::half_ceiling(petersen)).ok);

    Graph c6 = named_graph("cycle", {6});
    auto arc = brute_force_partition(c6, DemandFunctions::uniform(6, 1, 1));
    REQUIRE(arc.has_value());
    // ascending-mask order finds A = {0, 1} first
    CHECK(arc->members(Side::A) == std::vector<int>{0, 1});
    auto again = brute_force_partition(c6, DemandFunctions::uniform(6, 1, 1));
    CHECK(*again == *arc);
}

TEST_CASE("tiny and empty graphs") {
    CHECK(!brute_force_partition(Graph(1, {}), DemandFunctions::uniform(1, 0, 0)).has_value());
    CHECK(!brute_force_partition(Graph(0, {}), DemandFunctions::uniform(0, 0, 0)).has_value());
    // two isolated vertices satisfy zero demands on both sides
    auto pair = brute_force_partition(Graph(2, {}), DemandFunctions::uniform(2, 0, 0));
    REQUIRE(pair.has_value());
    CHECK(pair->count(Side::A) == 1);
}

TEST_CASE("size limits are errors, not truncation") {
    OracleLimits tight;
    tight.max_n_partition = 10;
    Graph g(11, {});
    CHECK_THROWS_AS(brute_force_partition(g, DemandFunctions::uniform(11, 0, 0), tight),
                    SizeLimitError);

    Graph big(21, {});
    CHECK_THROWS_AS(brute_force_degenerate(big, VertexSet::full(21),
                                           uniform_thresholds(21, 1)),
                    SizeLimitError);
    Graph huge(65, {});
    CHECK_THROWS_AS(brute_force_four_sparse(huge), SizeLimitError);
}

TEST_CASE("agrees with a direct verifier scan, including first-found order") {
    Rng rng(606);
    int some_found = 0, some_none = 0;
    for (int round = 0; round < 150; ++round) {
        int n = 4 + static_cast<int>(rng.below(5));
        Graph g = random_gnp(n, 30 + static_cast<int>(rng.below(40)), rng);
        DemandFunctions dem = DemandFunctions::uniform(n, 0, 0);
        for (int v = 0; v < n; ++v) {
            dem.a[v] = static_cast<int>(rng.below(3));
            dem.b[v] = static_cast<int>(rng.below(3));
        }
        auto fast = brute_force_partition(g, dem);
        auto naive = naive_first_partition(g, dem);
        CHECK(fast.has_value() == naive.has_value());
        if (fast && naive) {
            CHECK(*fast == *naive);
            CHECK(verify_internal(g, *fast, dem).ok);
            ++some_found;
        } else {
            ++some_none;
        }
    }
    CHECK(some_found > 20);
    CHECK(some_none > 20);
}

TEST_CASE("degeneracy oracle on fixed cases") {
    Graph tri = triangle();
    CHECK(!brute_force_degenerate(tri, VertexSet::full(3), uniform_thresholds(3, 1)));
    CHECK(brute_force_degenerate(tri, VertexSet::full(3), uniform_thresholds(3, 2)));
    CHECK(brute_force_degenerate(tri, VertexSet(3), uniform_thresholds(3, 0)));
}

TEST_CASE("four-sparsity oracle on fixed families") {
    CHECK(!brute_force_four_sparse(diamond()));
    CHECK(!brute_force_four_sparse(named_graph("complete", {4})));
    CHECK(brute_force_four_sparse(named_graph("circulant", {9, 1, 3})));
    Rng rng(33);
    for (int round = 0; round < 20; ++round)
        CHECK(brute_force_four_sparse(random_tree(4 + static_cast<int>(rng.below(12)), rng)));
}

}  // TEST_SUITE
