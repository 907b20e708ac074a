#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "regclique/bitset.hpp"

namespace regclique {

// Immutable simple undirected graph on dense vertices 0..n-1.
// Adjacency is stored as one n-bit row per vertex; rows stay symmetric and
// loop-free for the lifetime of the object. Safe to share across threads.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
        if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
        rows_.assign(n, Bitset(n));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) +
                                            "," + std::to_string(v) + "}");
            if (u == v)
                throw std::invalid_argument("loop edge not allowed: vertex " + std::to_string(u));
            rows_[u].set(v);
            rows_[v].set(u);
        }
    }

    int order() const { return n_; }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }

    int degree(int v) const { return rows_[v].count(); }

    const Bitset& row(int v) const { return rows_[v]; }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& r : rows_) twice += r.count();
        return twice / 2;
    }

    // Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = rows_[u].next(u + 1); v != -1; v = rows_[u].next(v + 1))
                out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const = default;

private:
    int n_;
    std::vector<Bitset> rows_;
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Vertex (g,h) of G x H gets index g*|H| + h. Adjacency: equal in one
// coordinate, adjacent in the other.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b) {
            for (int b2 = h.row(b).next(b + 1); b2 != -1; b2 = h.row(b).next(b2 + 1))
                edges.emplace_back(a * nh + b, a * nh + b2);
            for (int a2 = g.row(a).next(a + 1); a2 != -1; a2 = g.row(a).next(a2 + 1))
                edges.emplace_back(a * nh + b, a2 * nh + b);
        }
    return Graph(ng * nh, edges);
}

inline Graph grid(int q) {
    if (q < 2) throw std::invalid_argument("grid requires q >= 2");
    Graph kq = complete_graph(q);
    return cartesian_product(kq, kq);
}

// The 12-vertex icosahedral graph with a fixed labeling:
//   0        apex, adjacent to the upper ring 1..5
//   1..5     upper 5-cycle; vertex i also reaches two lower-ring vertices
//   6..10    lower 5-cycle
//   11       apex, adjacent to the lower ring 6..10
// Antipodal pairs under this labeling: (0,11) (1,9) (2,10) (3,6) (4,7) (5,8).
inline Graph icosahedron() {
    static const std::array<std::pair<int, int>, 30> kEdges{{
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
        {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
        {1, 6}, {1, 7}, {2, 7}, {2, 8}, {3, 8},
        {3, 9}, {4, 9}, {4, 10}, {5, 10}, {5, 6},
        {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 6},
        {11, 6}, {11, 7}, {11, 8}, {11, 9}, {11, 10},
    }};
    return Graph(12, std::vector<std::pair<int, int>>(kEdges.begin(), kEdges.end()));
}

// Block-offset labeling: vertex x of the j-th input maps to
// (sum of preceding orders) + x.
inline Graph disjoint_union(std::span<const Graph> graphs) {
    if (graphs.empty()) throw std::invalid_argument("disjoint_union of no graphs");
    int total = 0;
    std::vector<std::pair<int, int>> edges;
    for (const auto& g : graphs) {
        for (auto [u, v] : g.edges()) edges.emplace_back(total + u, total + v);
        total += g.order();
    }
    return Graph(total, edges);
}

inline Graph disjoint_union(const std::vector<Graph>& graphs) {
    return disjoint_union(std::span<const Graph>(graphs));
}

}  // namespace regclique
