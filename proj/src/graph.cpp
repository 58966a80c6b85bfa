#include "intpart/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "intpart/errors.hpp"

namespace intpart {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("parallel edge at vertex " + std::to_string(v));
    }
    m_ = static_cast<int>(edge_list.size());
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
    return best;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n())
        throw std::out_of_range("vertex id " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n()) + ")");
}

Graph Graph::read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw FormatError("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw FormatError("edge list: negative n or m");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw FormatError("edge list: expected " + std::to_string(m) +
                              " edges, got " + std::to_string(i));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw FormatError("edge list: endpoint out of range on edge " +
                              std::to_string(i));
        if (u == v)
            throw FormatError("edge list: self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(std::min(u, v)),
                           static_cast<int>(std::max(u, v)));
    }
    std::string extra;
    if (in >> extra) throw FormatError("edge list: trailing data '" + extra + "'");
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw FormatError("edge list: duplicate edge");
    return Graph(static_cast<int>(n), edges);
}

Graph Graph::load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open graph file: " + path);
    return read_edge_list(in);
}

void Graph::write_edge_list(std::ostream& out) const {
    out << n() << ' ' << m_ << '\n';
    for (auto [u, v] : edges()) out << u << ' ' << v << '\n';
}

void Graph::save_edge_list(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open output file: " + path);
    write_edge_list(out);
    if (!out) throw FormatError("write failed: " + path);
}

}  // namespace intpart
