#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace intpart {

// Subset of the vertices {0,...,n-1} of a fixed universe. O(1) membership,
// tracked cardinality; members() yields ascending ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : in_(static_cast<std::size_t>(universe), 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& f : s.in_) f = 1;
        s.count_ = universe;
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet of(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    int universe() const { return static_cast<int>(in_.size()); }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(int v) const { return in_[static_cast<std::size_t>(v)] != 0; }

    void add(int v) {
        auto& f = in_[static_cast<std::size_t>(v)];
        count_ += (f == 0);
        f = 1;
    }

    void remove(int v) {
        auto& f = in_[static_cast<std::size_t>(v)];
        count_ -= (f != 0);
        f = 0;
    }

    VertexSet complement() const {
        VertexSet s(universe());
        for (int v = 0; v < universe(); ++v)
            if (!contains(v)) s.add(v);
        return s;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count_));
        for (int v = 0; v < universe(); ++v)
            if (in_[static_cast<std::size_t>(v)]) out.push_back(v);
        return out;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.in_ == b.in_;
    }

private:
    std::vector<std::uint8_t> in_;
    int count_ = 0;
};

}  // namespace intpart
