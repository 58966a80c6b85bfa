#include "intpart/generation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "intpart/errors.hpp"
#include "intpart/rng.hpp"

namespace intpart {

RegularMethod parse_regular_method(const std::string& name) {
    if (name == "rejection") return RegularMethod::rejection;
    if (name == "pairing") return RegularMethod::pairing;
    throw std::invalid_argument("unknown generation method: " + name);
}

std::string regular_method_name(RegularMethod m) {
    return m == RegularMethod::rejection ? "rejection" : "pairing";
}

RegularMethod auto_regular_method(int d) {
    return d <= 6 ? RegularMethod::rejection : RegularMethod::pairing;
}

namespace {

void check_spec(const GenSpec& spec) {
    if (spec.n < 0 || spec.d < 0 || spec.d >= std::max(spec.n, 1))
        throw std::invalid_argument("regular graph spec needs 0 <= d < n");
    if ((static_cast<long long>(spec.n) * spec.d) % 2 != 0)
        throw ParityError("n*d must be even (n=" + std::to_string(spec.n) +
                          ", d=" + std::to_string(spec.d) + ")");
    if (spec.max_attempts < 1)
        throw std::invalid_argument("max_attempts must be positive");
}

std::vector<int> make_stubs(int n, int d) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs.push_back(v);
    return stubs;
}

Graph regular_by_rejection(const GenSpec& spec, Rng& rng) {
    std::vector<int> stubs = make_stubs(spec.n, spec.d);
    std::vector<std::pair<int, int>> pairs(stubs.size() / 2);
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        rng.shuffle(stubs);
        bool simple = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                simple = false;
                break;
            }
            pairs[i / 2] = {std::min(u, v), std::max(u, v)};
        }
        if (simple) {
            std::sort(pairs.begin(), pairs.end());
            simple = std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
        }
        if (simple) return Graph(spec.n, pairs);
    }
    throw AttemptsExhaustedError(
        "no simple graph after " + std::to_string(spec.max_attempts) +
        " rejection attempts (n=" + std::to_string(spec.n) +
        ", d=" + std::to_string(spec.d) + "); the pairing method handles larger d");
}

Graph regular_by_pairing(const GenSpec& spec, Rng& rng) {
    const std::size_t total = static_cast<std::size_t>(spec.n) * static_cast<std::size_t>(spec.d);
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        std::vector<int> stubs = make_stubs(spec.n, spec.d);
        std::vector<std::unordered_set<int>> present(static_cast<std::size_t>(spec.n));
        std::vector<std::pair<int, int>> edge_list;
        edge_list.reserve(total / 2);
        bool stuck = false;
        while (!stubs.empty()) {
            bool joined = false;
            // Random draws almost always succeed quickly; the bounded retry
            // count only decides when to pay for the exhaustive stuck check.
            for (int tries = 0; tries < 64; ++tries) {
                std::size_t i = static_cast<std::size_t>(rng.below(stubs.size()));
                std::size_t j = static_cast<std::size_t>(rng.below(stubs.size()));
                if (i == j) continue;
                int u = stubs[i], v = stubs[j];
                if (u == v || present[static_cast<std::size_t>(u)].count(v)) continue;
                present[static_cast<std::size_t>(u)].insert(v);
                present[static_cast<std::size_t>(v)].insert(u);
                edge_list.emplace_back(u, v);
                if (i < j) std::swap(i, j);  // pop the higher index first
                stubs[i] = stubs.back();
                stubs.pop_back();
                stubs[j] = stubs.back();
                stubs.pop_back();
                joined = true;
                break;
            }
            if (joined) continue;
            bool any_suitable = false;
            for (std::size_t i = 0; i < stubs.size() && !any_suitable; ++i)
                for (std::size_t j = i + 1; j < stubs.size(); ++j) {
                    int u = stubs[i], v = stubs[j];
                    if (u != v && !present[static_cast<std::size_t>(u)].count(v)) {
                        any_suitable = true;
                        break;
                    }
                }
            if (!any_suitable) {
                stuck = true;
                break;
            }
        }
        if (!stuck) return Graph(spec.n, edge_list);
    }
    throw AttemptsExhaustedError("pairing generation restarted " +
                                 std::to_string(spec.max_attempts) + " times (n=" +
                                 std::to_string(spec.n) + ", d=" + std::to_string(spec.d) + ")");
}

}  // namespace

Graph random_regular(const GenSpec& spec) {
    check_spec(spec);
    Rng rng(spec.seed);
    if (spec.method == RegularMethod::rejection) return regular_by_rejection(spec, rng);
    return regular_by_pairing(spec, rng);
}

namespace {

Graph complete_graph(int k) {
    if (k < 1) throw std::invalid_argument("complete: need k >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    return Graph(k, edges);
}

Graph complete_bipartite(int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("complete_bipartite: need k, l >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < l; ++v) edges.emplace_back(u, k + v);
    return Graph(k + l, edges);
}

Graph cycle_graph(int k) {
    if (k < 3) throw std::invalid_argument("cycle: need k >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u) edges.emplace_back(u, (u + 1) % k);
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    return Graph(k, edges);
}

Graph circulant_graph(int k, const std::vector<int>& offsets) {
    if (k < 3) throw std::invalid_argument("circulant: need k >= 3");
    if (offsets.empty()) throw std::invalid_argument("circulant: need at least one offset");
    std::vector<int> uniq = offsets;
    std::sort(uniq.begin(), uniq.end());
    if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end())
        throw std::invalid_argument("circulant: duplicate offset");
    for (int o : uniq)
        if (o < 1 || o > k / 2)
            throw std::invalid_argument("circulant: offsets must lie in [1, k/2]");
    std::vector<std::pair<int, int>> edges;
    for (int o : uniq) {
        if (2 * o == k) {
            for (int u = 0; u < k / 2; ++u) edges.emplace_back(u, u + o);
        } else {
            for (int u = 0; u < k; ++u) {
                int v = (u + o) % k;
                edges.emplace_back(std::min(u, v), std::max(u, v));
            }
        }
    }
    return Graph(k, edges);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    return Graph(10, edges);
}

void need_params(const std::string& name, const std::vector<int>& params, std::size_t k) {
    if (params.size() != k)
        throw std::invalid_argument(name + ": expected " + std::to_string(k) +
                                    " parameter(s), got " + std::to_string(params.size()));
}

}  // namespace

Graph named_graph(const std::string& name, const std::vector<int>& params) {
    if (name == "complete") {
        need_params(name, params, 1);
        return complete_graph(params[0]);
    }
    if (name == "complete_bipartite") {
        need_params(name, params, 2);
        return complete_bipartite(params[0], params[1]);
    }
    if (name == "cycle") {
        need_params(name, params, 1);
        return cycle_graph(params[0]);
    }
    if (name == "circulant") {
        if (params.size() < 2)
            throw std::invalid_argument("circulant: expected k followed by offsets");
        return circulant_graph(params[0], {params.begin() + 1, params.end()});
    }
    if (name == "petersen") {
        need_params(name, params, 0);
        return petersen_graph();
    }
    throw std::invalid_argument("unknown named graph: " + name);
}

}  // namespace intpart
