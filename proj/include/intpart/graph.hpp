#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace intpart {

// Immutable simple undirected graph over dense 0-based vertex ids.
// Adjacency lists are sorted ascending; construction rejects self-loops,
// parallel edges and out-of-range endpoints. Safe to share across threads
// once built.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    int degree(int v) const;
    int max_degree() const;
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    // Throws std::out_of_range if v is not a vertex id.
    void check_vertex(int v) const;

    // Text format: first line "n m", then m lines "u v" (0-based). The reader
    // accepts edges in any order and orientation and rejects self-loops and
    // duplicates; the writer emits u < v, sorted.
    static Graph read_edge_list(std::istream& in);
    static Graph load_edge_list(const std::string& path);
    void write_edge_list(std::ostream& out) const;
    void save_edge_list(const std::string& path) const;

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

}  // namespace intpart
