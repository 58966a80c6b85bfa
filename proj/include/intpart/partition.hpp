#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "intpart/graph.hpp"
#include "intpart/vertex_set.hpp"

namespace intpart {

enum class Side : std::uint8_t { A = 0, B = 1 };

inline Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }
inline char side_name(Side s) { return s == Side::A ? 'A' : 'B'; }

// Total two-sided vertex assignment. Totality is structural; nontriviality
// (both sides non-empty) is not, and is checked by verifiers where required.
struct Partition {
    std::vector<Side> side;

    Partition() = default;
    explicit Partition(int n, Side fill = Side::B)
        : side(static_cast<std::size_t>(n), fill) {}

    static Partition from_a_set(const VertexSet& a);

    int n() const { return static_cast<int>(side.size()); }
    bool in_a(int v) const { return side[static_cast<std::size_t>(v)] == Side::A; }
    Side side_of(int v) const { return side[static_cast<std::size_t>(v)]; }
    void flip(int v) { side[static_cast<std::size_t>(v)] = opposite(side_of(v)); }

    int count(Side s) const;
    std::vector<int> members(Side s) const;
    VertexSet set_of(Side s) const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

// Per-vertex integer demands: a(x) applies to vertices placed in A, b(x) to
// vertices placed in B.
struct DemandFunctions {
    std::vector<int> a;
    std::vector<int> b;

    static DemandFunctions uniform(int n, int av, int bv);
    // a = b = ceil(d/2); the demands under which an (a,b)-internal partition
    // is an internal partition.
    static DemandFunctions half_ceiling(const Graph& g);
    // a = ceil(d/2), b = floor(d/2); satisfies a+b = d exactly.
    static DemandFunctions half_split(const Graph& g);

    int demand(Side s, int v) const {
        return s == Side::A ? a[static_cast<std::size_t>(v)] : b[static_cast<std::size_t>(v)];
    }

    // Throws std::invalid_argument on length mismatch or negative values.
    void check_sized(int n) const;
};

struct Violation {
    int vertex;  // -1 encodes "this side is empty"
    Side side;
    int required;
    int actual;
};

struct VerificationReport {
    bool ok = false;
    std::vector<Violation> violations;

    std::string summary() const;
};

// |N(x) ∩ S|.
int degree_in_subset(const Graph& g, int x, const VertexSet& s);

// Number of edges with endpoints on opposite sides.
int cut_size(const Graph& g, const Partition& p);

// Checks d_A(x) >= a(x) on A, d_B(x) >= b(x) on B, and that both sides are
// non-empty. Failures are reported, never thrown.
VerificationReport verify_internal(const Graph& g, const Partition& p,
                                   const DemandFunctions& dem);

// w(A,B) = a(B) + b(A) - e(A,B).
long long potential_w(const Graph& g, const Partition& p, const DemandFunctions& dem);

// Change of potential_w if x switched sides: 2(b(x)-d_B(x)) for x in B,
// 2(a(x)-d_A(x)) for x in A. Valid only when d(x) = a(x)+b(x); throws
// DemandMismatchError otherwise.
long long move_delta_w(const Graph& g, const Partition& p, const DemandFunctions& dem,
                       int x);

// Partition text format: line "A: id id ...", line "B: id id ...". Every
// vertex of the graph must appear exactly once across the two lines.
Partition read_partition(std::istream& in, int n);
Partition load_partition(const std::string& path, int n);
void write_partition(std::ostream& out, const Partition& p);
void save_partition(const std::string& path, const Partition& p);

// Demands text format: one line per vertex, "a b".
DemandFunctions read_demands(std::istream& in, int n);
DemandFunctions load_demands(const std::string& path, int n);

}  // namespace intpart
