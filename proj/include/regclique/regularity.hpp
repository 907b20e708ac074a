#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "regclique/distance.hpp"
#include "regclique/graph.hpp"

namespace regclique {

// Certifier outcome: either the certificate or a small vertex-tuple witness
// of the first violation in a fixed ascending scan order. Witness layouts
// are documented per certifier.
template <typename Cert>
struct Certified {
    std::optional<Cert> cert;
    std::vector<int> witness;

    bool holds() const { return cert.has_value(); }
    explicit operator bool() const { return holds(); }
    const Cert& operator*() const { return *cert; }
    const Cert* operator->() const { return &*cert; }
};

struct EdgeRegularCert {
    int v = 0;
    int k = 0;
    int lambda = 0;

    bool operator==(const EdgeRegularCert&) const = default;
};

struct StronglyRegularCert {
    int v = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;

    bool operator==(const StronglyRegularCert&) const = default;
};

// {b_0..b_{d-1}; c_1..c_d}; a_i = b_0 - b_i - c_i with b_d = 0, c_0 = 0.
struct IntersectionArray {
    int diameter = 0;
    std::vector<int> b;
    std::vector<int> c;

    int k() const { return b.front(); }
    int a(int i) const {
        int bi = i < diameter ? b[i] : 0;
        int ci = i > 0 ? c[i - 1] : 0;
        return b.front() - bi - ci;
    }

    bool operator==(const IntersectionArray&) const = default;
};

struct AntipodalCert {
    int a = 0;                             // common class size
    std::vector<std::vector<int>> classes;  // sorted by representative (min element)
};

inline int common_neighbour_count(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common_neighbour_count requires u != v");
    return g.row(u).intersection_count(g.row(v));
}

// Witness on failure: {u, w} = lexicographically least pair of vertices with
// unequal degrees (u is always 0).
inline Certified<int> regular_degree(const Graph& g) {
    int k = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != k) return {std::nullopt, {0, v}};
    return {k, {}};
}

// Witness on a lambda violation: {u0,v0,u1,v1} = the least edge and the
// least edge whose common-neighbour count differs from it.
inline Certified<EdgeRegularCert> edge_regular_params(const Graph& g) {
    auto reg = regular_degree(g);
    if (!reg) return {std::nullopt, reg.witness};
    int k = *reg.cert;
    if (g.order() < 2 || k < 1) return {std::nullopt, {}};  // empty graph

    int lambda = -1, ru = -1, rv = -1;
    for (int u = 0; u < g.order(); ++u) {
        const Bitset& row = g.row(u);
        for (int v = row.next(u + 1); v != -1; v = row.next(v + 1)) {
            int c = common_neighbour_count(g, u, v);
            if (lambda == -1) {
                lambda = c;
                ru = u;
                rv = v;
            } else if (c != lambda) {
                return {std::nullopt, {ru, rv, u, v}};
            }
        }
    }
    return {EdgeRegularCert{g.order(), k, lambda}, {}};
}

// Distinct common-neighbour counts over distinct nonadjacent pairs;
// empty for complete graphs.
inline std::set<int> mu_values(const Graph& g) {
    std::set<int> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.insert(common_neighbour_count(g, u, v));
    return out;
}

// none when not edge-regular (witness passed through), when complete
// (mu is vacuous), or when mu varies (witness {y0,z0,y1,z1} = the least
// nonadjacent pair and the least disagreeing one).
inline Certified<StronglyRegularCert> strongly_regular_params(const Graph& g) {
    auto er = edge_regular_params(g);
    if (!er) return {std::nullopt, er.witness};

    int mu = -1, ry = -1, rz = -1;
    for (int y = 0; y < g.order(); ++y)
        for (int z = y + 1; z < g.order(); ++z) {
            if (g.adjacent(y, z)) continue;
            int c = common_neighbour_count(g, y, z);
            if (mu == -1) {
                mu = c;
                ry = y;
                rz = z;
            } else if (c != mu) {
                return {std::nullopt, {ry, rz, y, z}};
            }
        }
    if (mu == -1) return {std::nullopt, {}};  // complete graph
    return {StronglyRegularCert{er->v, er->k, er->lambda, mu}, {}};
}

// Distance-regularity census. For every ordered pair (x,y) at distance i the
// counts of neighbours of y at distance i-1 / i+1 from x must be the
// constants c_i / b_i. Witness on failure: {x0,y0,x1,y1} = first pair seen at
// that distance and the disagreeing pair; {0,u} when disconnected.
inline Certified<IntersectionArray> intersection_array(const Graph& g) {
    const int n = g.order();
    DistanceTable dt = distances(g);
    for (int u = 0; u < n; ++u)
        if (!dt.reachable(0, u)) return {std::nullopt, {0, u}};

    auto reg = regular_degree(g);
    if (!reg) return {std::nullopt, reg.witness};
    int d = 0;
    for (int u = 0; u < n; ++u) d = std::max(d, dt.eccentricity(u));
    if (d == 0) return {IntersectionArray{0, {0}, {}}, {}};  // K_1

    std::vector<int> b(d + 1, -1), c(d + 1, -1);
    std::vector<std::pair<int, int>> ref(d + 1, {-1, -1});
    b[0] = *reg.cert;
    for (int x = 0; x < n; ++x) {
        std::vector<Bitset> sphere(d + 1, Bitset(n));
        for (int u = 0; u < n; ++u) sphere[dt.at(x, u)].set(u);
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            int i = dt.at(x, y);
            int ci = g.row(y).intersection_count(sphere[i - 1]);
            int bi = i < d ? g.row(y).intersection_count(sphere[i + 1]) : 0;
            if (c[i] == -1) {
                c[i] = ci;
                b[i] = i < d ? bi : 0;
                ref[i] = {x, y};
            } else if (ci != c[i] || (i < d && bi != b[i])) {
                return {std::nullopt, {ref[i].first, ref[i].second, x, y}};
            }
        }
    }
    IntersectionArray ia;
    ia.diameter = d;
    ia.b.assign(b.begin(), b.begin() + d);
    ia.c.assign(c.begin() + 1, c.end());
    return {std::move(ia), {}};
}

// Classes of the relation "distance 0 or d". Witness: {x,y,z} = a triple
// violating transitivity, or {r0,r1} = representatives of two classes of
// different sizes. Throws on disconnected input or diameter < 2.
inline Certified<AntipodalCert> antipodal_classes(const Graph& g) {
    const int n = g.order();
    DistanceTable dt = distances(g);
    if (!dt.connected()) throw std::invalid_argument("antipodal_classes requires a connected graph");
    int d = 0;
    for (int u = 0; u < n; ++u) d = std::max(d, dt.eccentricity(u));
    if (d < 2) throw std::invalid_argument("antipodal_classes requires diameter >= 2");

    std::vector<Bitset> cls(n);
    for (int x = 0; x < n; ++x) {
        cls[x] = dt.sphere(x, d);
        cls[x].set(x);
    }
    for (int x = 0; x < n; ++x)
        for (int y = cls[x].next(0); y != -1; y = cls[x].next(y + 1)) {
            if (y == x || cls[y] == cls[x]) continue;
            for (int z = 0; z < n; ++z) {
                if (cls[y].test(z) && !cls[x].test(z)) return {std::nullopt, {x, y, z}};
                if (cls[x].test(z) && !cls[y].test(z)) return {std::nullopt, {y, x, z}};
            }
        }

    AntipodalCert cert;
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        auto members = cls[x].to_vector();
        for (int m : members) seen[m] = true;
        cert.classes.push_back(std::move(members));
    }
    cert.a = static_cast<int>(cert.classes.front().size());
    for (const auto& c : cert.classes)
        if (static_cast<int>(c.size()) != cert.a)
            return {std::nullopt, {cert.classes.front().front(), c.front()}};
    if (cert.a < 2) return {std::nullopt, {cert.classes.front().front()}};
    return {std::move(cert), {}};
}

// 2-antipodal distance-regular of diameter 3.
inline bool is_taylor(const Graph& g) {
    auto ia = intersection_array(g);
    if (!ia || ia->diameter != 3) return false;
    auto ac = antipodal_classes(g);
    return ac.holds() && ac->a == 2;
}

}  // namespace regclique
