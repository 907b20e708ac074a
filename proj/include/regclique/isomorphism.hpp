#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "regclique/distance.hpp"
#include "regclique/graph.hpp"

namespace regclique {

struct IsoResult {
    bool isomorphic = false;
    // mapping[u] = image of u in the second graph; empty when not isomorphic
    std::vector<int> mapping;

    explicit operator bool() const { return isomorphic; }
};

namespace iso_detail {

// Joint colour refinement: initial colour is the sorted distance row, then
// repeated (colour, sorted neighbour colours) splitting until stable.
// Returns false when the colour histograms of the two graphs diverge.
inline bool refine_colours(const Graph& g, const Graph& h,
                           std::vector<int>& cg, std::vector<int>& ch) {
    const int n = g.order();
    auto dg = distances(g);
    auto dh = distances(h);

    auto initial = [n](const Graph&, const DistanceTable& dt, int v) {
        std::vector<int> row(n);
        for (int u = 0; u < n; ++u) row[u] = dt.at(v, u);
        std::sort(row.begin(), row.end());
        return row;
    };

    std::map<std::vector<int>, int> ids;
    cg.resize(n);
    ch.resize(n);
    for (int v = 0; v < n; ++v) {
        auto r = initial(g, dg, v);
        cg[v] = ids.emplace(std::move(r), static_cast<int>(ids.size())).first->second;
    }
    for (int v = 0; v < n; ++v) {
        auto r = initial(h, dh, v);
        ch[v] = ids.emplace(std::move(r), static_cast<int>(ids.size())).first->second;
    }

    auto histograms_match = [&] {
        std::map<int, int> a, b;
        for (int c : cg) ++a[c];
        for (int c : ch) ++b[c];
        return a == b;
    };
    if (!histograms_match()) return false;

    std::size_t colours = ids.size();
    while (true) {
        std::map<std::vector<int>, int> next_ids;
        auto signature = [&](const Graph& gr, const std::vector<int>& col, int v) {
            std::vector<int> sig{col[v]};
            const Bitset& nbrs = gr.row(v);
            for (int u = nbrs.next(0); u != -1; u = nbrs.next(u + 1)) sig.push_back(col[u]);
            std::sort(sig.begin() + 1, sig.end());
            return sig;
        };
        std::vector<int> ng(n), nh(n);
        for (int v = 0; v < n; ++v) {
            auto s = signature(g, cg, v);
            ng[v] = next_ids.emplace(std::move(s), static_cast<int>(next_ids.size())).first->second;
        }
        for (int v = 0; v < n; ++v) {
            auto s = signature(h, ch, v);
            nh[v] = next_ids.emplace(std::move(s), static_cast<int>(next_ids.size())).first->second;
        }
        cg = std::move(ng);
        ch = std::move(nh);
        if (!histograms_match()) return false;
        if (next_ids.size() == colours) break;
        colours = next_ids.size();
    }
    return true;
}

struct Matcher {
    const Graph& g;
    const Graph& h;
    const std::vector<int>& cg;
    const std::vector<int>& ch;
    std::vector<int> g_to_h;
    std::vector<int> h_used;
    std::vector<int> assigned;  // g vertices in assignment order

    Matcher(const Graph& g_, const Graph& h_, const std::vector<int>& cg_,
            const std::vector<int>& ch_)
        : g(g_), h(h_), cg(cg_), ch(ch_), g_to_h(g_.order(), -1), h_used(h_.order(), 0) {}

    // Next branch vertex: unmapped g vertex with the most already-mapped
    // neighbours, ties to the lowest index.
    int pick() const {
        int best = -1, best_score = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (g_to_h[v] != -1) continue;
            int score = 0;
            for (int w : assigned)
                if (g.adjacent(v, w)) ++score;
            if (score > best_score) {
                best = v;
                best_score = score;
            }
        }
        return best;
    }

    bool consistent(int u, int cand) const {
        for (int w : assigned)
            if (g.adjacent(u, w) != h.adjacent(cand, g_to_h[w])) return false;
        return true;
    }

    bool solve() {
        if (static_cast<int>(assigned.size()) == g.order()) return true;
        int u = pick();
        for (int cand = 0; cand < h.order(); ++cand) {
            if (h_used[cand] || ch[cand] != cg[u]) continue;
            if (!consistent(u, cand)) continue;
            g_to_h[u] = cand;
            h_used[cand] = 1;
            assigned.push_back(u);
            if (solve()) return true;
            assigned.pop_back();
            h_used[cand] = 0;
            g_to_h[u] = -1;
        }
        return false;
    }
};

}  // namespace iso_detail

// Exact isomorphism test for small graphs (intended for n <= ~100).
// A returned mapping always satisfies u ~ v  <=>  mapping[u] ~ mapping[v].
inline IsoResult are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return {};
    std::vector<int> cg, ch;
    if (!iso_detail::refine_colours(g, h, cg, ch)) return {};
    iso_detail::Matcher m(g, h, cg, ch);
    if (!m.solve()) return {};
    return {true, std::move(m.g_to_h)};
}

}  // namespace regclique
