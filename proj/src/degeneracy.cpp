#include "intpart/degeneracy.hpp"

#include <set>
#include <stdexcept>

#include "intpart/errors.hpp"
#include "intpart/partition.hpp"

namespace intpart {

std::vector<int> uniform_thresholds(int n, int value) {
    return std::vector<int>(static_cast<std::size_t>(n), value);
}

std::vector<int> shifted(std::vector<int> f, int delta) {
    for (int& v : f) v += delta;
    return f;
}

static void check_inputs(const Graph& g, const VertexSet& s, const std::vector<int>& f) {
    if (s.universe() != g.n())
        throw std::invalid_argument("vertex set universe does not match graph");
    if (static_cast<int>(f.size()) != g.n())
        throw std::invalid_argument("threshold vector must have one entry per vertex");
}

PeelResult peel_core(const Graph& g, const VertexSet& s, const std::vector<int>& f,
                     const std::vector<int>& rank) {
    check_inputs(g, s, f);
    if (static_cast<int>(rank.size()) != g.n())
        throw std::invalid_argument("rank vector must have one entry per vertex");

    PeelResult result;
    result.core = s;
    std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
        if (s.contains(v)) deg[static_cast<std::size_t>(v)] = degree_in_subset(g, v, s);

    // removable = members with deg <= f, keyed by rank for a deterministic trace
    std::set<std::pair<int, int>> removable;
    for (int v = 0; v < g.n(); ++v)
        if (s.contains(v) && deg[static_cast<std::size_t>(v)] <= f[static_cast<std::size_t>(v)])
            removable.insert({rank[static_cast<std::size_t>(v)], v});

    while (!removable.empty()) {
        int v = removable.begin()->second;
        removable.erase(removable.begin());
        result.order.emplace_back(v, deg[static_cast<std::size_t>(v)]);
        result.core.remove(v);
        for (int u : g.neighbors(v)) {
            if (!result.core.contains(u)) continue;
            int& du = deg[static_cast<std::size_t>(u)];
            --du;
            if (du == f[static_cast<std::size_t>(u)])
                removable.insert({rank[static_cast<std::size_t>(u)], u});
        }
    }
    return result;
}

PeelResult peel_core(const Graph& g, const VertexSet& s, const std::vector<int>& f) {
    std::vector<int> identity(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) identity[static_cast<std::size_t>(v)] = v;
    return peel_core(g, s, f, identity);
}

bool is_degenerate(const Graph& g, const VertexSet& s, const std::vector<int>& f) {
    return peel_core(g, s, f).core.empty();
}

VertexSet maximal_internal_subset(const Graph& g, const VertexSet& s,
                                  const std::vector<int>& f) {
    return peel_core(g, s, shifted(f, -1)).core;
}

VertexSet minimal_internal_subset(const Graph& g, const std::vector<int>& f) {
    VertexSet a = maximal_internal_subset(g, VertexSet::full(g.n()), f);
    if (a.empty())
        throw NoInternalSubsetError("the vertex set has no non-empty internal subset "
                                    "for the given thresholds");
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (int x : a.members()) {
            VertexSet without = a;
            without.remove(x);
            VertexSet t = maximal_internal_subset(g, without, f);
            if (!t.empty()) {
                a = t;
                shrunk = true;
                break;
            }
        }
    }
    return a;
}

}  // namespace intpart
