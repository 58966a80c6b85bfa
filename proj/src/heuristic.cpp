#include "intpart/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "intpart/rng.hpp"

namespace intpart {

long long objective_violation(const Graph& g, const Partition& p,
                              const DemandFunctions& dem) {
    if (p.n() != g.n())
        throw std::invalid_argument("partition size does not match graph");
    dem.check_sized(g.n());
    long long total = 0;
    for (int v = 0; v < g.n(); ++v) {
        int own = 0;
        for (int u : g.neighbors(v)) own += (p.side_of(u) == p.side_of(v));
        int need = dem.demand(p.side_of(v), v);
        if (own < need) total += need - own;
    }
    return total;
}

int default_balance_slack(const Graph& g) {
    // ceil(log_d(n)) with d the mean degree; clamped to >= 1. The mean degree
    // stands in for d on irregular inputs.
    const int n = g.n();
    if (n < 2) return 1;
    double d = std::max(2.0, 2.0 * g.m() / n);
    int slack = static_cast<int>(std::ceil(std::log(n) / std::log(d) - 1e-12));
    return std::max(slack, 1);
}

int resolved_max_iters(const HeuristicConfig& cfg, int n) {
    return cfg.max_iters > 0 ? cfg.max_iters : 50 * n;
}

namespace {

// Mutable search position: side labels, same-side degree of every vertex,
// per-side member lists for O(1) random picks, the set of vertices currently
// below demand, and the running objective.
class SearchPosition {
public:
    SearchPosition(const Graph& g, const DemandFunctions& dem, const std::vector<int>& a_members)
        : g_(g), dem_(dem), part_(g.n(), Side::B), deg_own_(static_cast<std::size_t>(g.n()), 0),
          pos_(static_cast<std::size_t>(g.n()), -1) {
        for (int v : a_members) part_.side[static_cast<std::size_t>(v)] = Side::A;
        for (int v = 0; v < g.n(); ++v) {
            auto& members = members_[side_index(part_.side_of(v))];
            pos_[static_cast<std::size_t>(v)] = static_cast<int>(members.size());
            members.push_back(v);
            int own = 0;
            for (int u : g.neighbors(v)) own += (part_.side_of(u) == part_.side_of(v));
            deg_own_[static_cast<std::size_t>(v)] = own;
        }
        for (int v = 0; v < g.n(); ++v) {
            long long short_by = shortfall(v);
            objective_ += short_by;
            if (short_by > 0) violating_.insert(v);
        }
    }

    long long objective() const { return objective_; }
    int side_size(Side s) const { return static_cast<int>(members_[side_index(s)].size()); }
    const std::set<int>& violating() const { return violating_; }
    const Partition& partition() const { return part_; }
    Side side_of(int v) const { return part_.side_of(v); }

    int random_member(Side s, Rng& rng) const {
        const auto& members = members_[side_index(s)];
        return members[rng.below(members.size())];
    }

    // Objective change if v switched sides, without applying it.
    long long switch_delta(int v) const {
        long long delta = 0;
        const Side s = part_.side_of(v);
        const int deg = g_.degree(v);
        const int own = deg_own_[static_cast<std::size_t>(v)];
        delta -= positive(dem_.demand(s, v) - own);
        delta += positive(dem_.demand(opposite(s), v) - (deg - own));
        for (int u : g_.neighbors(v)) {
            int du = deg_own_[static_cast<std::size_t>(u)];
            int need = dem_.demand(part_.side_of(u), u);
            if (part_.side_of(u) == s) {
                // u loses a same-side neighbor
                if (du <= need) delta += 1;
            } else {
                // u gains one
                if (du < need) delta -= 1;
            }
        }
        return delta;
    }

    void flip(int v) {
        // Retire v's contribution first; its side and degree both change.
        long long before = shortfall(v);
        objective_ -= before;
        if (before > 0) violating_.erase(v);

        const Side from = part_.side_of(v);
        const Side to = opposite(from);
        for (int u : g_.neighbors(v)) {
            if (part_.side_of(u) == from) {
                set_deg_own(u, deg_own_[static_cast<std::size_t>(u)] - 1);
            } else {
                set_deg_own(u, deg_own_[static_cast<std::size_t>(u)] + 1);
            }
        }
        auto& from_members = members_[side_index(from)];
        int idx = pos_[static_cast<std::size_t>(v)];
        from_members[static_cast<std::size_t>(idx)] = from_members.back();
        pos_[static_cast<std::size_t>(from_members.back())] = idx;
        from_members.pop_back();
        auto& to_members = members_[side_index(to)];
        pos_[static_cast<std::size_t>(v)] = static_cast<int>(to_members.size());
        to_members.push_back(v);
        part_.side[static_cast<std::size_t>(v)] = to;
        // v's own-side degree becomes its old other-side degree
        deg_own_[static_cast<std::size_t>(v)] =
            g_.degree(v) - deg_own_[static_cast<std::size_t>(v)];

        long long after = shortfall(v);
        objective_ += after;
        if (after > 0) violating_.insert(v);
    }

private:
    static long long positive(long long x) { return x > 0 ? x : 0; }
    static std::size_t side_index(Side s) { return s == Side::A ? 0 : 1; }

    long long shortfall(int v) const {
        return positive(dem_.demand(part_.side_of(v), v) -
                        deg_own_[static_cast<std::size_t>(v)]);
    }

    void set_deg_own(int v, int value) {
        long long before = shortfall(v);
        deg_own_[static_cast<std::size_t>(v)] = value;
        long long after = shortfall(v);
        objective_ += after - before;
        if (after > 0 && before == 0) violating_.insert(v);
        if (after == 0 && before > 0) violating_.erase(v);
    }

    const Graph& g_;
    const DemandFunctions& dem_;
    Partition part_;
    std::vector<int> deg_own_;
    std::vector<int> pos_;
    std::vector<int> members_[2];
    std::set<int> violating_;
    long long objective_ = 0;
};

}  // namespace

HeuristicResult local_search(const Graph& g, const DemandFunctions& dem,
                             const HeuristicConfig& cfg) {
    dem.check_sized(g.n());
    const int n = g.n();
    if (n < 4) throw std::invalid_argument("local_search needs n >= 4");
    const int max_iters = resolved_max_iters(cfg, n);
    const int slack = cfg.balance_slack > 0 ? cfg.balance_slack : default_balance_slack(g);

    Rng rng(cfg.seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    rng.shuffle(order);
    order.resize(static_cast<std::size_t>(n / 2));  // balanced random start
    SearchPosition pos(g, dem, order);

    HeuristicResult result;
    auto record = [&](IterKind kind, int vertex) {
        if (cfg.record_trace) result.trace.push_back({kind, vertex, pos.objective()});
    };

    int last_moved = -1;
    // Stagnation guard: zero-delta switches can orbit a frustrated state
    // forever, so after this many iterations without the objective improving
    // on its post-kick level, a kick is forced. Consecutive unproductive
    // kicks grow stronger (more flips per kick), standing in for the restarts
    // this search deliberately does not do.
    const int stall_limit = std::max(10, n / 10);
    // Each flip disturbs about mean-degree constraints, so denser graphs get
    // shorter kick bursts.
    const int mean_degree = g.n() > 0 ? std::max(1, 2 * g.m() / g.n()) : 1;
    const int kick_cap = std::max(2, std::min({n / 3, 8, 2 * n / (mean_degree + 1)}));
    int stall = 0;
    int kick_strength = 1;
    long long best_recent = objective_violation(g, pos.partition(), dem);
    long long global_best = best_recent;

    // |A| must stay within slack of n/2: |2|A| - n| <= 2*slack, integer-exact.
    auto balance_violated = [&]() {
        return std::abs(2 * pos.side_size(Side::A) - n) > 2 * slack;
    };
    auto larger_side = [&]() {
        return pos.side_size(Side::A) >= pos.side_size(Side::B) ? Side::A : Side::B;
    };
    auto track_progress = [&]() {
        if (pos.objective() < global_best) {
            global_best = pos.objective();
            kick_strength = 1;
        }
    };

    // One diversification flip: preferably a cross-side neighbor of a random
    // below-demand vertex (feeds the deficit directly), else a random vertex
    // of the larger side. Never empties a side.
    auto kick_flip = [&]() {
        int chosen = -1;
        if (!pos.violating().empty()) {
            std::vector<int> violating(pos.violating().begin(), pos.violating().end());
            int v = violating[rng.below(violating.size())];
            std::vector<int> helpers;
            for (int u : g.neighbors(v))
                if (pos.side_of(u) != pos.side_of(v) && pos.side_size(pos.side_of(u)) > 1)
                    helpers.push_back(u);
            if (!helpers.empty()) chosen = helpers[rng.below(helpers.size())];
        }
        if (chosen < 0) chosen = pos.random_member(larger_side(), rng);
        pos.flip(chosen);
        last_moved = chosen;
        record(IterKind::plateau_kick, chosen);
    };

    while (true) {
        if (pos.objective() == 0 && !balance_violated()) {
            result.converged = true;
            break;
        }
        if (result.iterations >= max_iters) break;
        ++result.iterations;

        if (balance_violated()) {
            int v = pos.random_member(larger_side(), rng);
            pos.flip(v);
            last_moved = v;
            record(IterKind::balance_kick, v);
            // deliberately no stall reset: on small graphs balance kicks fire
            // constantly and would otherwise mask stagnation
            track_progress();
            continue;
        }

        // Candidate switches: violating vertices, except the one moved on the
        // previous iteration (stops two-cycles) and any whose side they would
        // empty. Keep everything tied for the best objective delta and choose
        // among those uniformly, so plateaus are walked randomly instead of
        // being orbited deterministically.
        long long best_delta = 0;
        bool have_candidate = false;
        std::vector<int> best_set;
        for (int v : pos.violating()) {
            if (v == last_moved) continue;
            if (pos.side_size(pos.side_of(v)) <= 1) continue;
            long long delta = pos.switch_delta(v);
            if (!have_candidate || delta < best_delta) {
                have_candidate = true;
                best_delta = delta;
                best_set.clear();
            }
            if (delta == best_delta) best_set.push_back(v);
        }
        if (have_candidate && best_delta <= 0 && stall < stall_limit) {
            int v = best_set[rng.below(best_set.size())];
            pos.flip(v);
            last_moved = v;
            record(IterKind::switch_move, v);
            if (pos.objective() < best_recent) {
                best_recent = pos.objective();
                stall = 0;
            } else {
                ++stall;
            }
            track_progress();
        } else {
            // Plateau (every admissible switch worsens) or stagnation: apply
            // kick_strength diversification flips, each one a full iteration.
            kick_flip();
            for (int extra = 1; extra < kick_strength && result.iterations < max_iters &&
                                !balance_violated();
                 ++extra) {
                ++result.iterations;
                kick_flip();
            }
            kick_strength = std::min(kick_strength + 1, kick_cap);
            stall = 0;
            best_recent = pos.objective();
            track_progress();
        }
    }

    result.final_objective = pos.objective();
    if (result.converged) result.partition = pos.partition();
    return result;
}

}  // namespace intpart
