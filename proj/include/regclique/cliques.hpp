#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "regclique/graph.hpp"
#include "regclique/regularity.hpp"

namespace regclique {

namespace clique_detail {

struct BronKerbosch {
    const Graph& g;
    std::vector<int> current;
    std::vector<std::vector<int>>& out;

    // Pivot: lowest-index vertex of P|X maximising |P & N(u)|.
    int pivot(const Bitset& p, const Bitset& x) const {
        int best = -1, best_count = -1;
        for (int pool = 0; pool < 2; ++pool) {
            const Bitset& set = pool == 0 ? p : x;
            for (int u = set.next(0); u != -1; u = set.next(u + 1)) {
                int c = p.intersection_count(g.row(u));
                if (c > best_count || (c == best_count && u < best)) {
                    best = u;
                    best_count = c;
                }
            }
        }
        return best;
    }

    void expand(Bitset p, Bitset x) {
        if (p.none() && x.none()) {
            std::vector<int> clique = current;
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
            return;
        }
        int u = pivot(p, x);
        Bitset ext = p;
        ext.subtract(g.row(u));
        for (int v = ext.next(0); v != -1; v = ext.next(v + 1)) {
            current.push_back(v);
            expand(p & g.row(v), x & g.row(v));
            current.pop_back();
            p.reset(v);
            x.set(v);
        }
    }
};

}  // namespace clique_detail

// All inclusion-maximal cliques, each sorted ascending, list sorted
// lexicographically.
inline std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    std::vector<std::vector<int>> out;
    clique_detail::BronKerbosch bk{g, {}, out};
    Bitset p(g.order());
    for (int v = 0; v < g.order(); ++v) p.set(v);
    bk.expand(std::move(p), Bitset(g.order()));
    std::sort(out.begin(), out.end());
    return out;
}

// Nexus of a clique: the constant number of inside neighbours seen from every
// outside vertex, when it exists and is positive. Witness: {x} = first
// outside vertex with no inside neighbour, else {x0,x1} = the first outside
// vertex and the first one disagreeing with it.
inline Certified<int> clique_nexus(const Graph& g, const std::vector<int>& clique) {
    if (clique.empty()) throw std::invalid_argument("clique_nexus: empty clique");
    Bitset mask(g.order());
    for (int v : clique) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("clique_nexus: vertex out of range");
        if (mask.test(v)) throw std::invalid_argument("clique_nexus: repeated vertex");
        mask.set(v);
    }
    for (int u : clique)
        if (g.row(u).intersection_count(mask) != static_cast<int>(clique.size()) - 1)
            throw std::invalid_argument("clique_nexus: vertex set is not a clique");
    if (static_cast<int>(clique.size()) == g.order())
        throw std::invalid_argument("clique_nexus: clique covers all vertices");

    int e = -1, first = -1;
    for (int x = 0; x < g.order(); ++x) {
        if (mask.test(x)) continue;
        int c = g.row(x).intersection_count(mask);
        if (c == 0) return {std::nullopt, {x}};
        if (e == -1) {
            e = c;
            first = x;
        } else if (c != e) {
            return {std::nullopt, {first, x}};
        }
    }
    return {e, {}};
}

struct RegularClique {
    std::vector<int> vertices;
    int nexus = 0;
};

// Regular cliques among the maximal cliques (the whole vertex set is
// excluded: regularity needs an outside vertex). A non-maximal clique can
// only be e-regular with e = |C|, in which case any fully-adjacent outside
// vertex extends it, so every such clique is reported under a maximal
// extension.
inline std::vector<RegularClique> regular_cliques(const Graph& g,
                                                  std::optional<int> e_filter = std::nullopt) {
    std::vector<RegularClique> out;
    for (auto& c : maximal_cliques(g)) {
        if (static_cast<int>(c.size()) == g.order()) continue;
        auto nexus = clique_nexus(g, c);
        if (nexus && (!e_filter || *nexus == *e_filter))
            out.push_back({std::move(c), *nexus});
    }
    return out;
}

struct CliqueSpread {
    std::vector<std::vector<int>> cliques;       // partition of V, by ascending minimum
    std::vector<std::optional<int>> nexus;       // per clique, when defined
};

enum class SpreadStatus { kFound, kNone, kBudgetExceeded };

struct SpreadSearchResult {
    SpreadStatus status = SpreadStatus::kNone;
    std::optional<CliqueSpread> spread;
    long long nodes = 0;

    explicit operator bool() const { return status == SpreadStatus::kFound; }
};

inline constexpr long long kDefaultSpreadBudget = 10'000'000;

namespace clique_detail {

struct CoverSearch {
    const std::vector<Bitset>& candidates;
    const std::vector<std::vector<int>>& by_vertex;
    int n;
    long long budget;
    long long nodes = 0;
    bool over_budget = false;
    Bitset covered;
    std::vector<int> parts;

    bool run() {
        int v = 0;
        while (v < n && covered.test(v)) ++v;
        if (v == n) return true;
        for (int idx : by_vertex[v]) {
            if (candidates[idx].intersects(covered)) continue;
            if (++nodes > budget) {
                over_budget = true;
                return false;
            }
            covered |= candidates[idx];
            parts.push_back(idx);
            if (run()) return true;
            parts.pop_back();
            covered.subtract(candidates[idx]);
            if (over_budget) return false;
        }
        return false;
    }
};

}  // namespace clique_detail

// Exact-cover search for a partition of V into cliques drawn from the
// maximal cliques (restricted to regular ones when require_regular, and to
// nexus e when given). Branches on the lowest uncovered vertex, trying
// candidates in lexicographic order, so the first cover found is the
// lexicographically first one.
inline SpreadSearchResult find_spread(const Graph& g, bool require_regular,
                                      std::optional<int> e = std::nullopt,
                                      long long budget = kDefaultSpreadBudget) {
    std::vector<std::vector<int>> pool;
    if (require_regular) {
        for (auto& rc : regular_cliques(g, e)) pool.push_back(std::move(rc.vertices));
    } else {
        pool = maximal_cliques(g);
    }

    const int n = g.order();
    std::vector<Bitset> masks;
    masks.reserve(pool.size());
    for (const auto& c : pool) {
        Bitset m(n);
        for (int v : c) m.set(v);
        masks.push_back(std::move(m));
    }
    std::vector<std::vector<int>> by_vertex(n);
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (int v : pool[i]) by_vertex[v].push_back(static_cast<int>(i));

    clique_detail::CoverSearch search{masks, by_vertex, n, budget, 0, false, Bitset(n), {}};
    bool found = search.run();
    if (search.over_budget) return {SpreadStatus::kBudgetExceeded, std::nullopt, search.nodes};
    if (!found) return {SpreadStatus::kNone, std::nullopt, search.nodes};

    CliqueSpread spread;
    for (int idx : search.parts) {
        const auto& c = pool[idx];
        if (static_cast<int>(c.size()) < n) {
            auto nx = clique_nexus(g, c);
            spread.nexus.push_back(nx ? std::optional<int>(*nx.cert) : std::nullopt);
        } else {
            spread.nexus.push_back(std::nullopt);  // whole-set clique, nexus undefined
        }
        spread.cliques.push_back(c);
    }
    return {SpreadStatus::kFound, std::move(spread), search.nodes};
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> kept;  // kept[new index] = original index
};

// Induced subgraph on V minus the given set (any proper subset, typically a
// clique), with the index-compaction map.
inline InducedSubgraph delete_clique(const Graph& g, const std::vector<int>& removed) {
    const int n = g.order();
    Bitset mask(n);
    for (int v : removed) {
        if (v < 0 || v >= n) throw std::invalid_argument("delete_clique: vertex out of range");
        mask.set(v);
    }
    if (mask.count() == n) throw std::invalid_argument("delete_clique: cannot remove every vertex");

    std::vector<int> kept;
    std::vector<int> new_index(n, -1);
    for (int v = 0; v < n; ++v)
        if (!mask.test(v)) {
            new_index[v] = static_cast<int>(kept.size());
            kept.push_back(v);
        }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (new_index[u] != -1 && new_index[v] != -1)
            edges.emplace_back(new_index[u], new_index[v]);
    return {Graph(static_cast<int>(kept.size()), edges), std::move(kept)};
}

struct TriangleCensus {
    std::vector<std::tuple<int, int, int>> per_edge;  // (u, v, triangle count), lex order
    std::map<int, int> histogram;                     // triangle count -> number of edges
    long long triangle_count = 0;
};

// Triangles through each edge: t({u,v}) = |N(u) & N(v)|. The sum over edges
// is three times the triangle count.
inline TriangleCensus triangle_edge_census(const Graph& g) {
    TriangleCensus census;
    long long total = 0;
    for (auto [u, v] : g.edges()) {
        int t = g.row(u).intersection_count(g.row(v));
        census.per_edge.emplace_back(u, v, t);
        ++census.histogram[t];
        total += t;
    }
    assert(total % 3 == 0);
    census.triangle_count = total / 3;
    return census;
}

}  // namespace regclique
