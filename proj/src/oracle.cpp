#include "intpart/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "intpart/errors.hpp"

namespace intpart {

std::optional<Partition> brute_force_partition(const Graph& g, const DemandFunctions& dem,
                                               const OracleLimits& limits) {
    const int n = g.n();
    if (n > limits.max_n_partition || n > 60)
        throw SizeLimitError("brute_force_partition: n=" + std::to_string(n) +
                             " exceeds limit " + std::to_string(limits.max_n_partition));
    dem.check_sized(n);
    if (n < 2) return std::nullopt;

    // Splits are encoded by masks over vertices 1..n-1 (bit v-1 set: v is in
    // A); vertex 0 is pinned to A. The all-ones mask is the trivial split and
    // is excluded. Degrees and the count of unsatisfied vertices are updated
    // incrementally across the +1 bit flips, so the scan is O(d) amortized
    // per mask.
    std::vector<std::uint8_t> in_a(static_cast<std::size_t>(n), 0);
    in_a[0] = 1;
    std::vector<int> deg_a(static_cast<std::size_t>(n), 0);
    for (int u : g.neighbors(0)) deg_a[static_cast<std::size_t>(u)] = 1;

    std::vector<std::uint8_t> satisfied(static_cast<std::size_t>(n), 0);
    int unsat = 0;
    auto is_satisfied = [&](int v) {
        int own = in_a[static_cast<std::size_t>(v)]
                      ? deg_a[static_cast<std::size_t>(v)]
                      : g.degree(v) - deg_a[static_cast<std::size_t>(v)];
        int need = in_a[static_cast<std::size_t>(v)] ? dem.a[static_cast<std::size_t>(v)]
                                                     : dem.b[static_cast<std::size_t>(v)];
        return own >= need;
    };
    auto refresh = [&](int v) {
        bool now = is_satisfied(v);
        if (now != static_cast<bool>(satisfied[static_cast<std::size_t>(v)])) {
            unsat += now ? -1 : 1;
            satisfied[static_cast<std::size_t>(v)] = now;
        }
    };
    for (int v = 0; v < n; ++v) {
        satisfied[static_cast<std::size_t>(v)] = 1;
        if (!is_satisfied(v)) {
            satisfied[static_cast<std::size_t>(v)] = 0;
            ++unsat;
        }
    }

    auto toggle = [&](int v) {
        in_a[static_cast<std::size_t>(v)] ^= 1;
        int delta = in_a[static_cast<std::size_t>(v)] ? 1 : -1;
        for (int u : g.neighbors(v)) {
            deg_a[static_cast<std::size_t>(u)] += delta;
            refresh(u);
        }
        refresh(v);
    };

    auto partition_from_state = [&]() {
        Partition p(n, Side::B);
        for (int v = 0; v < n; ++v)
            if (in_a[static_cast<std::size_t>(v)]) p.side[static_cast<std::size_t>(v)] = Side::A;
        return p;
    };

    const std::uint64_t top = (1ULL << (n - 1)) - 1;  // all-ones: trivial, excluded
    if (unsat == 0) return partition_from_state();    // mask 0: A = {0}
    for (std::uint64_t mask = 1; mask < top; ++mask) {
        std::uint64_t flipped = mask ^ (mask - 1);
        while (flipped != 0) {
            int bit = std::countr_zero(flipped);
            flipped &= flipped - 1;
            toggle(bit + 1);
        }
        if (unsat == 0) return partition_from_state();
    }
    return std::nullopt;
}

bool brute_force_degenerate(const Graph& g, const VertexSet& s,
                            const std::vector<int>& f, const OracleLimits& limits) {
    if (s.universe() != g.n())
        throw std::invalid_argument("vertex set universe does not match graph");
    if (static_cast<int>(f.size()) != g.n())
        throw std::invalid_argument("threshold vector must have one entry per vertex");
    const std::vector<int> members = s.members();
    const int k = static_cast<int>(members.size());
    if (k > limits.max_set_degeneracy || k > 30)
        throw SizeLimitError("brute_force_degenerate: |S|=" + std::to_string(k) +
                             " exceeds limit " + std::to_string(limits.max_set_degeneracy));
    if (k == 0) return true;  // vacuous

    // Adjacency restricted to S, as bitmasks over member indices.
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && g.has_edge(members[static_cast<std::size_t>(i)],
                                     members[static_cast<std::size_t>(j)]))
                adj[static_cast<std::size_t>(i)] |= (1u << j);

    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        bool has_low_degree_vertex = false;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            int i = std::countr_zero(rest);
            int deg = std::popcount(adj[static_cast<std::size_t>(i)] & mask);
            if (deg <= f[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])]) {
                has_low_degree_vertex = true;
                break;
            }
        }
        if (!has_low_degree_vertex) return false;
    }
    return true;
}

bool brute_force_four_sparse(const Graph& g) {
    const int n = g.n();
    if (n > 64)
        throw SizeLimitError("brute_force_four_sparse: n=" + std::to_string(n) +
                             " exceeds limit 64");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[static_cast<std::size_t>(u)] |= (1ULL << v);
    auto edge = [&](int u, int v) {
        return (adj[static_cast<std::size_t>(u)] >> v) & 1ULL;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int edges = static_cast<int>(edge(a, b) + edge(a, c) + edge(a, d) +
                                                 edge(b, c) + edge(b, d) + edge(c, d));
                    if (edges >= 5) return false;
                }
    return true;
}

}  // namespace intpart
