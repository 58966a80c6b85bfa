#include "intpart/constructive.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "intpart/degeneracy.hpp"
#include "intpart/errors.hpp"
#include "intpart/sparsity.hpp"

namespace intpart {

LowDegreeSets low_degree_sets(const Graph& g, const VertexSet& a,
                              const DemandFunctions& dem) {
    if (a.universe() != g.n())
        throw std::invalid_argument("vertex set universe does not match graph");
    dem.check_sized(g.n());
    if (a.empty() || a.size() == g.n())
        throw std::invalid_argument("low_degree_sets needs a proper non-empty A");
    LowDegreeSets out{VertexSet(g.n()), VertexSet(g.n())};
    for (int v = 0; v < g.n(); ++v) {
        int inside = 0;
        for (int u : g.neighbors(v)) inside += a.contains(u);
        if (a.contains(v)) {
            if (inside == dem.a[static_cast<std::size_t>(v)]) out.c.add(v);
        } else {
            int in_b = g.degree(v) - inside;
            if (in_b <= dem.b[static_cast<std::size_t>(v)] - 1) out.d.add(v);
        }
    }
    return out;
}

static long long potential_of_set(const Graph& g, const VertexSet& a,
                                  const DemandFunctions& dem) {
    return potential_w(g, Partition::from_a_set(a), dem);
}

SearchState initialize_search(const Graph& g, const DemandFunctions& dem) {
    dem.check_sized(g.n());
    SearchState state;
    state.a = minimal_internal_subset(g, dem.a);
    // Strip below-demand vertices; no-op when the minimal set is internal.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x : state.a.members()) {
            if (degree_in_subset(g, x, state.a) < dem.a[static_cast<std::size_t>(x)]) {
                state.a.remove(x);
                changed = true;
            }
        }
    }
    state.w = potential_of_set(g, state.a, dem);
    return state;
}

namespace {

std::string dump_state(const Graph& g, const SearchState& state,
                       const DemandFunctions& dem, const std::string& reason) {
    std::ostringstream out;
    out << "{\"reason\":\"" << reason << "\",\"n\":" << g.n() << ",\"m\":" << g.m()
        << ",\"w\":" << state.w << ",\"steps\":" << state.trace.size() << ",\"A\":[";
    bool first = true;
    for (int v : state.a.members()) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << "]";
    if (!state.a.empty() && state.a.size() < g.n()) {
        auto sets = low_degree_sets(g, state.a, dem);
        out << ",\"C\":[";
        first = true;
        for (int v : sets.c.members()) {
            if (!first) out << ',';
            out << v;
            first = false;
        }
        out << "],\"D\":[";
        first = true;
        for (int v : sets.d.members()) {
            if (!first) out << ',';
            out << v;
            first = false;
        }
        out << "]";
    }
    out << "}";
    return out.str();
}

[[noreturn]] void fail_dichotomy(const Graph& g, const SearchState& state,
                                 const DemandFunctions& dem, const std::string& what) {
    throw DichotomyFailureError("constructive loop failure: " + what,
                                dump_state(g, state, dem, what));
}

void check_state_invariants(const Graph& g, SearchState& state,
                            const DemandFunctions& dem, const SearchStep& step) {
    const int na = state.a.size();
    if (na < 2 || na > g.n() - 2)
        fail_dichotomy(g, state, dem,
                       "|A| = " + std::to_string(na) + " outside [2, n-2]");
    if (!is_degenerate(g, state.a, dem.a))
        fail_dichotomy(g, state, dem, "A lost a-degeneracy");
    if (is_degenerate(g, state.a, shifted(dem.a, -1)))
        fail_dichotomy(g, state, dem, "A became (a-1)-degenerate");
    const bool lex_ok = step.kind == StepKind::absorb ? step.delta_w >= 2
                                                      : step.delta_w >= 0;
    if (!lex_ok)
        fail_dichotomy(g, state, dem,
                       "potential did not advance (delta_w = " +
                           std::to_string(step.delta_w) + ")");
}

}  // namespace

SearchStep loop_step(const Graph& g, SearchState& state, const DemandFunctions& dem,
                     const ConstructiveOptions& opts) {
    auto sets = low_degree_sets(g, state.a, dem);
    if (sets.d.empty())
        fail_dichotomy(g, state, dem, "D empty while the loop guard holds");

    const long long w_before = state.w;

    // Absorb branch: first (by id) x in D keeping A ∪ x a-degenerate.
    for (int x : sets.d.members()) {
        VertexSet grown = state.a;
        grown.add(x);
        if (!is_degenerate(g, grown, dem.a)) continue;
        state.a = grown;
        state.w = potential_of_set(g, state.a, dem);
        SearchStep step;
        step.kind = StepKind::absorb;
        step.x = x;
        step.delta_w = state.w - w_before;
        step.w_after = state.w;
        step.a_size_after = state.a.size();
        if (opts.check_invariants) check_state_invariants(g, state, dem, step);
        state.trace.push_back(step);
        return step;
    }

    // Shrink branch: drop an exact-demand vertex whose removal still leaves a
    // non-empty a-internal subset, and collapse A onto that subset. Keeps w
    // (the dropped vertex sits exactly at demand; peeled stragglers each add
    // 2) while |A| strictly falls, so the step advances (w, -|A|). Once no
    // such removal exists, the shed case below is guaranteed on 4-sparse
    // inputs.
    for (int y : sets.c.members()) {
        VertexSet without = state.a;
        without.remove(y);
        VertexSet core = maximal_internal_subset(g, without, dem.a);
        if (core.empty()) continue;
        SearchStep step;
        step.kind = StepKind::shrink;
        step.y = y;
        step.stripped = without.size() - core.size();
        state.a = core;
        state.w = potential_of_set(g, state.a, dem);
        step.delta_w = state.w - w_before;
        step.w_after = state.w;
        step.a_size_after = state.a.size();
        if (opts.check_invariants) check_state_invariants(g, state, dem, step);
        state.trace.push_back(step);
        return step;
    }

    // Shed branch: a triangle x-y-z with x in D and y, z adjacent in C.
    for (int x : sets.d.members()) {
        std::vector<int> c_neighbors;
        for (int u : g.neighbors(x))
            if (sets.c.contains(u)) c_neighbors.push_back(u);
        for (std::size_t i = 0; i < c_neighbors.size(); ++i) {
            for (std::size_t j = i + 1; j < c_neighbors.size(); ++j) {
                int y = c_neighbors[i], z = c_neighbors[j];
                if (!g.has_edge(y, z)) continue;
                SearchStep step;
                step.kind = StepKind::shed_pair;
                step.x = x;
                step.y = y;
                step.z = z;
                for (int v : {y, z}) {
                    int extra = 0;
                    for (int u : g.neighbors(v))
                        if (sets.c.contains(u) && u != y && u != z) ++extra;
                    if (extra > 0) step.clean_shed = false;
                }
                state.a.remove(y);
                state.a.remove(z);
                state.w = potential_of_set(g, state.a, dem);
                step.delta_w = state.w - w_before;
                step.w_after = state.w;
                step.a_size_after = state.a.size();
                if (opts.check_invariants) check_state_invariants(g, state, dem, step);
                state.trace.push_back(step);
                return step;
            }
        }
    }
    fail_dichotomy(g, state, dem, "no absorbable vertex and no shed triangle");
}

Partition extend_internal_pair(const Graph& g, const VertexSet& a_star,
                               const VertexSet& b_star, const DemandFunctions& dem) {
    dem.check_sized(g.n());
    if (a_star.universe() != g.n() || b_star.universe() != g.n())
        throw std::invalid_argument("vertex set universe does not match graph");
    if (a_star.empty() || b_star.empty())
        throw std::invalid_argument("extend_internal_pair needs non-empty sides");
    for (int v : a_star.members()) {
        if (b_star.contains(v))
            throw std::invalid_argument("extend_internal_pair needs disjoint sides");
        if (degree_in_subset(g, v, a_star) < dem.a[static_cast<std::size_t>(v)])
            throw std::invalid_argument("A side is not internal at vertex " +
                                        std::to_string(v));
    }
    for (int v : b_star.members())
        if (degree_in_subset(g, v, b_star) < dem.b[static_cast<std::size_t>(v)])
            throw std::invalid_argument("B side is not internal at vertex " +
                                        std::to_string(v));
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) < dem.a[static_cast<std::size_t>(v)] + dem.b[static_cast<std::size_t>(v)])
            throw DemandMismatchError("extend_internal_pair requires d(x) >= a(x)+b(x); "
                                      "vertex " + std::to_string(v) + " falls short");

    VertexSet a = a_star;
    std::vector<int> deg_a(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) deg_a[static_cast<std::size_t>(v)] = degree_in_subset(g, v, a);

    std::vector<char> assigned(static_cast<std::size_t>(g.n()), 0);
    for (int v : a_star.members()) assigned[static_cast<std::size_t>(v)] = 1;
    for (int v : b_star.members()) assigned[static_cast<std::size_t>(v)] = 1;

    // Unassigned vertices join A while their demand there is already met;
    // everything still unassigned afterwards goes to B, where its degree is
    // then at least b(x)+1.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n(); ++v) {
            if (assigned[static_cast<std::size_t>(v)]) continue;
            if (deg_a[static_cast<std::size_t>(v)] >= dem.a[static_cast<std::size_t>(v)]) {
                a.add(v);
                assigned[static_cast<std::size_t>(v)] = 1;
                for (int u : g.neighbors(v)) ++deg_a[static_cast<std::size_t>(u)];
                changed = true;
            }
        }
    }
    return Partition::from_a_set(a);
}

ConstructiveResult find_internal_partition_4sparse(const Graph& g,
                                                   const DemandFunctions& dem,
                                                   const ConstructiveOptions& opts) {
    dem.check_sized(g.n());
    for (int v = 0; v < g.n(); ++v) {
        int av = dem.a[static_cast<std::size_t>(v)];
        int bv = dem.b[static_cast<std::size_t>(v)];
        if (av < 2 || bv < 2)
            throw DemandMismatchError("constructive solver requires a(x), b(x) >= 2; "
                                      "vertex " + std::to_string(v) + " has a=" +
                                      std::to_string(av) + ", b=" + std::to_string(bv));
        if (g.degree(v) != av + bv)
            throw DemandMismatchError("constructive solver requires d(x) = a(x)+b(x); "
                                      "vertex " + std::to_string(v) + " has d=" +
                                      std::to_string(g.degree(v)) + ", a+b=" +
                                      std::to_string(av + bv));
    }
    if (!opts.force) {
        if (auto witness = find_dense_four_set(g)) {
            throw NotFourSparseError(
                "graph is not 4-sparse: vertices {" + std::to_string((*witness)[0]) + ", " +
                    std::to_string((*witness)[1]) + ", " + std::to_string((*witness)[2]) +
                    ", " + std::to_string((*witness)[3]) + "} span five or more edges",
                *witness);
        }
    }

    SearchState state = initialize_search(g, dem);
    const long long initial_w = state.w;
    const int initial_a_size = state.a.size();
    const std::vector<int> b_minus_1 = shifted(dem.b, -1);
    // (w, -|A|) advances strictly at every step and w is bounded by the total
    // demand, so the loop terminates; the cap is a backstop for forced
    // non-4-sparse inputs.
    const long long step_cap = 4LL * (g.m() + g.n() + 16);
    while (is_degenerate(g, state.a.complement(), b_minus_1)) {
        loop_step(g, state, dem, opts);
        if (static_cast<long long>(state.trace.size()) > step_cap)
            fail_dichotomy(g, state, dem, "step budget exceeded; loop is not advancing");
    }

    VertexSet a_star = maximal_internal_subset(g, state.a, dem.a);
    VertexSet b_star = maximal_internal_subset(g, state.a.complement(), dem.b);
    if (a_star.empty())
        fail_dichotomy(g, state, dem, "A contains no a-internal subset at loop exit");
    if (b_star.empty())
        fail_dichotomy(g, state, dem, "B contains no b-internal subset at loop exit");

    ConstructiveResult result;
    result.partition = extend_internal_pair(g, a_star, b_star, dem);
    result.trace = state.trace;
    result.initial_w = initial_w;
    result.initial_a_size = initial_a_size;
    result.final_w = state.w;
    auto report = verify_internal(g, result.partition, dem);
    if (!report.ok)
        fail_dichotomy(g, state, dem, "final partition failed verification: " +
                                          report.summary());
    return result;
}

void write_trace_jsonl(std::ostream& out, const std::vector<SearchStep>& trace) {
    int i = 0;
    for (const auto& s : trace) {
        const char* kind = s.kind == StepKind::absorb   ? "absorb"
                           : s.kind == StepKind::shrink ? "shrink"
                                                        : "shed_pair";
        out << "{\"step\":" << ++i << ",\"kind\":\"" << kind << "\"";
        if (s.kind == StepKind::absorb) {
            out << ",\"x\":" << s.x;
        } else if (s.kind == StepKind::shrink) {
            out << ",\"y\":" << s.y << ",\"stripped\":" << s.stripped;
        } else {
            out << ",\"x\":" << s.x << ",\"y\":" << s.y << ",\"z\":" << s.z;
        }
        out << ",\"delta_w\":" << s.delta_w << ",\"w\":" << s.w_after
            << ",\"a_size\":" << s.a_size_after << "}\n";
    }
}

}  // namespace intpart
