#include "intpart/partition.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "intpart/errors.hpp"

namespace intpart {

Partition Partition::from_a_set(const VertexSet& a) {
    Partition p(a.universe(), Side::B);
    for (int v = 0; v < a.universe(); ++v)
        if (a.contains(v)) p.side[static_cast<std::size_t>(v)] = Side::A;
    return p;
}

int Partition::count(Side s) const {
    int c = 0;
    for (Side t : side) c += (t == s);
    return c;
}

std::vector<int> Partition::members(Side s) const {
    std::vector<int> out;
    for (int v = 0; v < n(); ++v)
        if (side_of(v) == s) out.push_back(v);
    return out;
}

VertexSet Partition::set_of(Side s) const {
    VertexSet out(n());
    for (int v = 0; v < n(); ++v)
        if (side_of(v) == s) out.add(v);
    return out;
}

DemandFunctions DemandFunctions::uniform(int n, int av, int bv) {
    if (av < 0 || bv < 0) throw std::invalid_argument("demands must be non-negative");
    DemandFunctions d;
    d.a.assign(static_cast<std::size_t>(n), av);
    d.b.assign(static_cast<std::size_t>(n), bv);
    return d;
}

DemandFunctions DemandFunctions::half_ceiling(const Graph& g) {
    DemandFunctions d;
    d.a.resize(static_cast<std::size_t>(g.n()));
    d.b.resize(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        int half_up = (g.degree(v) + 1) / 2;
        d.a[static_cast<std::size_t>(v)] = half_up;
        d.b[static_cast<std::size_t>(v)] = half_up;
    }
    return d;
}

DemandFunctions DemandFunctions::half_split(const Graph& g) {
    DemandFunctions d;
    d.a.resize(static_cast<std::size_t>(g.n()));
    d.b.resize(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        int deg = g.degree(v);
        d.a[static_cast<std::size_t>(v)] = (deg + 1) / 2;
        d.b[static_cast<std::size_t>(v)] = deg / 2;
    }
    return d;
}

void DemandFunctions::check_sized(int n) const {
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("demand vectors must have one entry per vertex");
    for (int v : a)
        if (v < 0) throw std::invalid_argument("negative demand");
    for (int v : b)
        if (v < 0) throw std::invalid_argument("negative demand");
}

std::string VerificationReport::summary() const {
    if (ok) return "ok";
    std::ostringstream out;
    out << violations.size() << " violation(s):";
    for (const auto& v : violations) {
        if (v.vertex < 0) {
            out << " [side " << side_name(v.side) << " empty]";
        } else {
            out << " [vertex " << v.vertex << " in " << side_name(v.side) << ": "
                << v.actual << " < " << v.required << "]";
        }
    }
    return out.str();
}

static void check_partition_sized(const Graph& g, const Partition& p) {
    if (p.n() != g.n())
        throw std::invalid_argument("partition size does not match graph");
}

int degree_in_subset(const Graph& g, int x, const VertexSet& s) {
    g.check_vertex(x);
    if (s.universe() != g.n())
        throw std::invalid_argument("vertex set universe does not match graph");
    int c = 0;
    for (int u : g.neighbors(x)) c += s.contains(u);
    return c;
}

int cut_size(const Graph& g, const Partition& p) {
    check_partition_sized(g, p);
    int c = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && p.side_of(u) != p.side_of(v)) ++c;
    return c;
}

static int same_side_degree(const Graph& g, const Partition& p, int v) {
    int c = 0;
    for (int u : g.neighbors(v)) c += (p.side_of(u) == p.side_of(v));
    return c;
}

VerificationReport verify_internal(const Graph& g, const Partition& p,
                                   const DemandFunctions& dem) {
    check_partition_sized(g, p);
    dem.check_sized(g.n());
    VerificationReport report;
    if (p.count(Side::A) == 0)
        report.violations.push_back({-1, Side::A, 1, 0});
    if (p.count(Side::B) == 0)
        report.violations.push_back({-1, Side::B, 1, 0});
    for (int v = 0; v < g.n(); ++v) {
        Side s = p.side_of(v);
        int own = same_side_degree(g, p, v);
        int need = dem.demand(s, v);
        if (own < need) report.violations.push_back({v, s, need, own});
    }
    report.ok = report.violations.empty();
    return report;
}

long long potential_w(const Graph& g, const Partition& p, const DemandFunctions& dem) {
    check_partition_sized(g, p);
    dem.check_sized(g.n());
    long long total = 0;
    for (int v = 0; v < g.n(); ++v)
        total += p.in_a(v) ? dem.b[static_cast<std::size_t>(v)]
                           : dem.a[static_cast<std::size_t>(v)];
    return total - cut_size(g, p);
}

long long move_delta_w(const Graph& g, const Partition& p, const DemandFunctions& dem,
                       int x) {
    check_partition_sized(g, p);
    dem.check_sized(g.n());
    g.check_vertex(x);
    int deg = g.degree(x);
    int ax = dem.a[static_cast<std::size_t>(x)];
    int bx = dem.b[static_cast<std::size_t>(x)];
    if (deg != ax + bx)
        throw DemandMismatchError("move_delta_w requires d(x) = a(x)+b(x); vertex " +
                                  std::to_string(x) + " has d=" + std::to_string(deg) +
                                  ", a+b=" + std::to_string(ax + bx));
    int own = same_side_degree(g, p, x);
    int other = deg - own;
    // x in B: 2(b - d_B); x in A: 2(a - d_A). own is the current side's count.
    int need = p.in_a(x) ? ax : bx;
    (void)other;
    return 2LL * (need - own);
}

Partition read_partition(std::istream& in, int n) {
    Partition p(n, Side::B);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    bool got_a = false, got_b = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        Side s;
        if (tag == "A:") {
            if (got_a) throw FormatError("partition file: duplicate A line");
            got_a = true;
            s = Side::A;
        } else if (tag == "B:") {
            if (got_b) throw FormatError("partition file: duplicate B line");
            got_b = true;
            s = Side::B;
        } else {
            throw FormatError("partition file: expected 'A:' or 'B:', got '" + tag + "'");
        }
        long long v;
        while (ls >> v) {
            if (v < 0 || v >= n)
                throw FormatError("partition file: vertex " + std::to_string(v) +
                                  " out of range");
            if (seen[static_cast<std::size_t>(v)])
                throw FormatError("partition file: vertex " + std::to_string(v) +
                                  " listed twice");
            seen[static_cast<std::size_t>(v)] = 1;
            p.side[static_cast<std::size_t>(v)] = s;
        }
        if (!ls.eof()) throw FormatError("partition file: bad token in line '" + line + "'");
    }
    if (!got_a || !got_b) throw FormatError("partition file: need both 'A:' and 'B:' lines");
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<std::size_t>(v)])
            throw FormatError("partition file: vertex " + std::to_string(v) + " missing");
    return p;
}

Partition load_partition(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open partition file: " + path);
    return read_partition(in, n);
}

void write_partition(std::ostream& out, const Partition& p) {
    out << "A:";
    for (int v : p.members(Side::A)) out << ' ' << v;
    out << "\nB:";
    for (int v : p.members(Side::B)) out << ' ' << v;
    out << '\n';
}

void save_partition(const std::string& path, const Partition& p) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open output file: " + path);
    write_partition(out, p);
    if (!out) throw FormatError("write failed: " + path);
}

DemandFunctions read_demands(std::istream& in, int n) {
    DemandFunctions dem;
    dem.a.reserve(static_cast<std::size_t>(n));
    dem.b.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        long long a = 0, b = 0;
        if (!(in >> a >> b))
            throw FormatError("demands file: expected " + std::to_string(n) +
                              " 'a b' lines, got " + std::to_string(v));
        if (a < 0 || b < 0) throw FormatError("demands file: negative demand");
        dem.a.push_back(static_cast<int>(a));
        dem.b.push_back(static_cast<int>(b));
    }
    std::string extra;
    if (in >> extra) throw FormatError("demands file: trailing data '" + extra + "'");
    return dem;
}

DemandFunctions load_demands(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open demands file: " + path);
    return read_demands(in, n);
}

}  // namespace intpart
