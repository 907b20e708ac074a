#pragma once

#include <optional>
#include <vector>

#include "regclique/graph.hpp"

namespace regclique {

// All-pairs hop distances, -1 across components.
class DistanceTable {
public:
    static constexpr int kUnreachable = -1;

    DistanceTable(int n, std::vector<int> flat) : n_(n), dist_(std::move(flat)) {}

    int size() const { return n_; }

    int at(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }

    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

    // Max finite entry in row v, or kUnreachable when any vertex is unreachable.
    int eccentricity(int v) const {
        int ecc = 0;
        for (int u = 0; u < n_; ++u) {
            int d = at(v, u);
            if (d == kUnreachable) return kUnreachable;
            if (d > ecc) ecc = d;
        }
        return ecc;
    }

    bool connected() const {
        for (int u = 0; u < n_; ++u)
            if (at(0, u) == kUnreachable) return false;
        return true;
    }

    // Vertices at exactly distance d from x, as a bitset.
    Bitset sphere(int x, int d) const {
        Bitset s(n_);
        for (int u = 0; u < n_; ++u)
            if (at(x, u) == d) s.set(u);
        return s;
    }

private:
    int n_;
    std::vector<int> dist_;  // row-major n x n
};

inline DistanceTable distances(const Graph& g) {
    const int n = g.order();
    std::vector<int> flat(static_cast<std::size_t>(n) * n, DistanceTable::kUnreachable);
    std::vector<int> queue(n);
    for (int src = 0; src < n; ++src) {
        int* row = flat.data() + static_cast<std::size_t>(src) * n;
        row[src] = 0;
        int head = 0, tail = 0;
        queue[tail++] = src;
        while (head < tail) {
            int u = queue[head++];
            const Bitset& nbrs = g.row(u);
            for (int v = nbrs.next(0); v != -1; v = nbrs.next(v + 1)) {
                if (row[v] == DistanceTable::kUnreachable) {
                    row[v] = row[u] + 1;
                    queue[tail++] = v;
                }
            }
        }
    }
    return DistanceTable(n, std::move(flat));
}

// Max finite distance when connected, nullopt when disconnected.
inline std::optional<int> diameter(const Graph& g) {
    DistanceTable dt = distances(g);
    int best = 0;
    for (int u = 0; u < g.order(); ++u) {
        int e = dt.eccentricity(u);
        if (e == DistanceTable::kUnreachable) return std::nullopt;
        if (e > best) best = e;
    }
    return best;
}

}  // namespace regclique
