#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regclique/claims.hpp"
#include "regclique/cliques.hpp"
#include "regclique/distance.hpp"
#include "regclique/graph.hpp"
#include "regclique/graph6.hpp"
#include "regclique/regularity.hpp"

namespace regclique {

// Validated hypothesis bundle for the copy-expansion of an a-antipodal
// distance-regular base of diameter 3 into t copies.
struct FtPlan {
    Graph base;
    int t = 0;
    int a = 0;
    int diameter = 3;
    EdgeRegularCert er;
    IntersectionArray ia;
    std::vector<std::vector<int>> classes;  // antipodal classes, by ascending representative

    int clique_size() const { return er.lambda + 2; }
};

struct FtPlanResult {
    std::optional<FtPlan> plan;
    std::string error;  // names the first failed hypothesis

    explicit operator bool() const { return plan.has_value(); }
    const FtPlan& operator*() const { return *plan; }
    const FtPlan* operator->() const { return &*plan; }
};

// Re-derives every hypothesis from the graph itself: connected,
// distance-regular, diameter 3, antipodal with class size a, a a proper
// divisor of lambda+2, and t = (lambda+2)/a.
inline FtPlanResult plan_ft(const Graph& base, int t) {
    DistanceTable dt = distances(base);
    if (!dt.connected()) return {std::nullopt, "base graph is not connected"};
    auto ia = intersection_array(base);
    if (!ia) return {std::nullopt, "base graph is not distance-regular"};
    if (ia->diameter != 3)
        return {std::nullopt,
                "base graph has diameter " + std::to_string(ia->diameter) + ", not 3"};
    auto ac = antipodal_classes(base);
    if (!ac) return {std::nullopt, "base graph is not antipodal"};
    auto er = edge_regular_params(base);
    if (!er) return {std::nullopt, "base graph is not edge-regular"};

    const int a = ac->a;
    const int lam2 = er->lambda + 2;
    if (lam2 % a != 0 || a == lam2)
        return {std::nullopt, "class size " + std::to_string(a) +
                                  " is not a proper divisor of lambda+2 = " + std::to_string(lam2)};
    const int expected_t = lam2 / a;
    if (t != expected_t)
        return {std::nullopt, "t mismatch: expected t = (lambda+2)/a = " +
                                  std::to_string(expected_t) + ", got " + std::to_string(t)};

    FtPlan plan{base, t, a, 3, *er.cert, *ia.cert, ac->classes};
    return {std::move(plan), ""};
}

// Copy-major labeling: copy j of base vertex x is j*v + x, j in 0..t-1.
// Edges: each copy keeps the base edges; every pair of copies of the same
// vertex is joined; every copy of x is joined to every copy of each vertex
// at base distance 3 from x, including within the same copy (the intra-copy
// degree of the result is k+a-1, which forces the same-copy antipodal edges).
inline Graph build_ft(const FtPlan& plan) {
    const int v = plan.base.order();
    const int t = plan.t;
    std::vector<std::pair<int, int>> edges;
    for (int copy = 0; copy < t; ++copy)
        for (auto [x, y] : plan.base.edges()) edges.emplace_back(copy * v + x, copy * v + y);
    for (int x = 0; x < v; ++x)
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) edges.emplace_back(i * v + x, j * v + x);
    DistanceTable dt = distances(plan.base);
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) {
            if (dt.at(x, y) != 3) continue;
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < t; ++j) edges.emplace_back(i * v + x, j * v + y);
        }
    return Graph(v * t, edges);
}

struct CanonicalSpread {
    std::vector<std::vector<int>> cliques;  // one per antipodal class, sorted
};

// One clique per antipodal class: all copies of the whole class. Sizes are
// a*t = lambda+2 and the cliques partition the vertex set of the expansion.
inline CanonicalSpread canonical_spread(const FtPlan& plan) {
    const int v = plan.base.order();
    CanonicalSpread spread;
    for (const auto& cls : plan.classes) {
        std::vector<int> clique;
        clique.reserve(cls.size() * plan.t);
        for (int copy = 0; copy < plan.t; ++copy)
            for (int z : cls) clique.push_back(copy * v + z);
        std::sort(clique.begin(), clique.end());
        spread.cliques.push_back(std::move(clique));
    }
    return spread;
}

// Checks the three advertised properties of the expansion: the canonical
// spread consists of 1-regular cliques of size lambda+2, the result is
// (v*t, k+lambda+1, lambda)-edge-regular, and it is not strongly regular
// (witnessed by two nonadjacent pairs with different common-neighbour
// counts).
inline AuditReport verify_construction(const FtPlan& plan) {
    AuditReport report;
    report.title = "construction";
    Graph f = build_ft(plan);
    report.inputs.emplace_back("base", emit_graph6(plan.base));
    report.inputs.emplace_back("expansion", emit_graph6(f));

    const int lambda = plan.er.lambda;
    const long long want_v = static_cast<long long>(plan.base.order()) * plan.t;
    const long long want_k = plan.er.k + lambda + 1;

    {
        CanonicalSpread spread = canonical_spread(plan);
        Bitset covered(f.order());
        bool ok = true;
        std::vector<int> witness;
        for (const auto& clique : spread.cliques) {
            if (static_cast<int>(clique.size()) != lambda + 2) ok = false;
            for (int x : clique) {
                if (covered.test(x)) ok = false;
                covered.set(x);
            }
            auto nexus = clique_nexus(f, clique);
            if (!nexus || *nexus.cert != 1) {
                ok = false;
                witness = nexus.witness;
            }
        }
        if (covered.count() != f.order()) ok = false;
        report.claims.push_back({"construction.spread",
                                 "canonical cliques partition the vertex set, each 1-regular of "
                                 "size lambda+2",
                                 ok,
                                 {static_cast<long long>(spread.cliques.size()), lambda + 2},
                                 witness});
    }
    {
        auto er = edge_regular_params(f);
        bool ok = er.holds() && er->v == want_v && er->k == want_k && er->lambda == lambda;
        std::vector<long long> params{want_v, want_k, lambda};
        if (er) params.insert(params.end(), {er->v, er->k, er->lambda});
        report.claims.push_back({"construction.edge_regular",
                                 "expansion is edge-regular with parameters (v(lambda+2)/a, "
                                 "k+lambda+1, lambda)",
                                 ok, std::move(params), er.witness});
    }
    {
        auto sr = strongly_regular_params(f);
        auto mu = mu_values(f);
        bool ok = !sr.holds() && mu.size() >= 2;
        std::vector<long long> params(mu.begin(), mu.end());
        report.claims.push_back({"construction.not_strongly_regular",
                                 "expansion has nonadjacent pairs with different "
                                 "common-neighbour counts",
                                 ok, std::move(params), sr.witness});
    }
    return report;
}

}  // namespace regclique
