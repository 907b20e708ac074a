#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "regclique/cliques.hpp"
#include "regclique/graph.hpp"

using namespace regclique;

namespace {

Graph four_cycle() { return from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

}  // namespace

TEST_CASE("maximal_cliques") {
    REQUIRE(maximal_cliques(complete_graph(4)) ==
            std::vector<std::vector<int>>{{0, 1, 2, 3}});
    REQUIRE(maximal_cliques(four_cycle()) ==
            std::vector<std::vector<int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    SECTION("icosahedron has its twenty triangles") {
        auto cliques = maximal_cliques(icosahedron());
        REQUIRE(cliques.size() == 20);
        for (const auto& c : cliques) REQUIRE(c.size() == 3);
        REQUIRE(cliques == oracle::maximal_cliques(icosahedron()));
    }
    SECTION("agrees with the subset oracle on random graphs") {
        std::mt19937 rng(53);
        for (int trial = 0; trial < 80; ++trial) {
            Graph g = oracle::random_graph(rng, 12);
            REQUIRE(maximal_cliques(g) == oracle::maximal_cliques(g));
        }
    }
}

TEST_CASE("clique_nexus") {
    SECTION("a grid row is 1-regular") {
        REQUIRE(*clique_nexus(grid(3), {0, 1, 2}).cert == 1);
    }
    SECTION("K4 inside K5 has nexus 4") {
        REQUIRE(*clique_nexus(complete_graph(5), {0, 1, 2, 3}).cert == 4);
    }
    SECTION("an edge of the 4-cycle is 1-regular") {
        // C4 = K_{2,2}: every outside vertex touches exactly one endpoint
        auto r = clique_nexus(four_cycle(), {0, 1});
        REQUIRE(r.holds());
        REQUIRE(*r.cert == 1);
        REQUIRE(oracle::clique_nexus(four_cycle(), {0, 1}) == 1);
    }
    SECTION("an edge of the 5-cycle is not regular") {
        Graph c5 = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        auto r = clique_nexus(c5, {0, 1});
        REQUIRE_FALSE(r.holds());
        REQUIRE(r.witness == std::vector<int>{3});  // no neighbour inside
    }
    SECTION("unequal counts give a two-vertex witness") {
        // path 2-0-1: vertex 2 sees one endpoint of edge {0,1}... use a graph
        // where counts are 1 and 2: triangle {0,1,2} plus pendant 3 on 0.
        Graph g = from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
        auto r = clique_nexus(g, {0, 1});
        REQUIRE_FALSE(r.holds());
        REQUIRE(r.witness == std::vector<int>{2, 3});
    }
    SECTION("errors") {
        REQUIRE_THROWS_AS(clique_nexus(four_cycle(), {0, 2}), std::invalid_argument);
        REQUIRE_THROWS_AS(clique_nexus(complete_graph(3), {0, 1, 2}), std::invalid_argument);
        REQUIRE_THROWS_AS(clique_nexus(four_cycle(), {}), std::invalid_argument);
        REQUIRE_THROWS_AS(clique_nexus(four_cycle(), {1, 1}), std::invalid_argument);
    }
}

TEST_CASE("regular_cliques") {
    SECTION("grid(3): three rows and three columns at nexus 1") {
        auto found = regular_cliques(grid(3), 1);
        REQUIRE(found.size() == 6);
        std::vector<std::vector<int>> expect{{0, 1, 2}, {0, 3, 6}, {1, 4, 7},
                                             {2, 5, 8}, {3, 4, 5}, {6, 7, 8}};
        for (std::size_t i = 0; i < 6; ++i) {
            REQUIRE(found[i].vertices == expect[i]);
            REQUIRE(found[i].nexus == 1);
        }
    }
    SECTION("icosahedron has no 1-regular clique") {
        REQUIRE(regular_cliques(icosahedron(), 1).empty());
    }
    SECTION("the whole vertex set is excluded") {
        REQUIRE(regular_cliques(complete_graph(4)).empty());
    }
    SECTION("definition check against the all-subsets oracle") {
        std::mt19937 rng(59);
        for (int trial = 0; trial < 60; ++trial) {
            Graph g = oracle::random_graph(rng, 9);
            auto found = regular_cliques(g);
            // every reported clique satisfies the definition exactly
            for (const auto& rc : found) {
                auto e = oracle::clique_nexus(g, rc.vertices);
                REQUIRE(e.has_value());
                REQUIRE(*e == rc.nexus);
            }
            // every regular clique in the graph is either reported or is an
            // extendable one with e = |C|, absorbed by a maximal extension
            for (const auto& [clique, e] : oracle::all_regular_cliques(g)) {
                bool reported = false;
                for (const auto& rc : found) reported |= rc.vertices == clique;
                if (!reported) REQUIRE(e == static_cast<int>(clique.size()));
            }
        }
    }
}

TEST_CASE("find_spread") {
    SECTION("grid(3) rows win lexicographically") {
        auto result = find_spread(grid(3), true, 1);
        REQUIRE(result.status == SpreadStatus::kFound);
        REQUIRE(result.spread->cliques ==
                std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
        for (const auto& nx : result.spread->nexus) REQUIRE(nx == 1);
    }
    SECTION("K4: regular spread impossible, trivial partition otherwise") {
        REQUIRE(find_spread(complete_graph(4), true).status == SpreadStatus::kNone);
        auto loose = find_spread(complete_graph(4), false);
        REQUIRE(loose.status == SpreadStatus::kFound);
        REQUIRE(loose.spread->cliques == std::vector<std::vector<int>>{{0, 1, 2, 3}});
        REQUIRE_FALSE(loose.spread->nexus[0].has_value());
    }
    SECTION("5-cycle has no spread") {
        Graph c5 = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        REQUIRE(find_spread(c5, false).status == SpreadStatus::kNone);
        REQUIRE(find_spread(c5, true).status == SpreadStatus::kNone);
    }
    SECTION("singleton parts come from isolated vertices, never under regularity") {
        Graph g = disjoint_union({complete_graph(3), complete_graph(1)});
        auto loose = find_spread(g, false);
        REQUIRE(loose.status == SpreadStatus::kFound);
        REQUIRE(loose.spread->cliques == std::vector<std::vector<int>>{{0, 1, 2}, {3}});
        REQUIRE(find_spread(g, true).status == SpreadStatus::kNone);
    }
    SECTION("budget abort") {
        auto result = find_spread(grid(4), true, std::nullopt, 1);
        REQUIRE(result.status == SpreadStatus::kBudgetExceeded);
        REQUIRE_FALSE(result.spread.has_value());
    }
    SECTION("found spreads are true partitions of V") {
        std::mt19937 rng(61);
        for (int trial = 0; trial < 60; ++trial) {
            Graph g = oracle::random_graph(rng, 9);
            auto result = find_spread(g, false);
            if (result.status != SpreadStatus::kFound) continue;
            std::vector<bool> seen(g.order(), false);
            for (const auto& part : result.spread->cliques) {
                REQUIRE(oracle::is_clique(g, part));
                for (int v : part) {
                    REQUIRE_FALSE(seen[v]);
                    seen[v] = true;
                }
            }
            for (bool s : seen) REQUIRE(s);
        }
    }
}

TEST_CASE("delete_clique") {
    SECTION("K5 minus one vertex is K4") {
        auto sub = delete_clique(complete_graph(5), {0});
        REQUIRE(sub.graph == complete_graph(4));
        REQUIRE(sub.kept == std::vector<int>{1, 2, 3, 4});
    }
    SECTION("removing a 1-regular row drops every remaining degree by one") {
        auto sub = delete_clique(grid(3), {0, 1, 2});
        REQUIRE(sub.graph.order() == 6);
        for (int v = 0; v < 6; ++v) REQUIRE(sub.graph.degree(v) == 3);
    }
    SECTION("empty removal is the identity") {
        REQUIRE(delete_clique(grid(3), {}).graph == grid(3));
    }
    SECTION("cannot remove everything") {
        REQUIRE_THROWS_AS(delete_clique(complete_graph(3), {0, 1, 2}), std::invalid_argument);
    }
}

TEST_CASE("triangle_edge_census") {
    SECTION("K4: every edge in two triangles") {
        auto census = triangle_edge_census(complete_graph(4));
        REQUIRE(census.histogram == std::map<int, int>{{2, 6}});
        REQUIRE(census.triangle_count == 4);
    }
    SECTION("icosahedron: thirty edges, twenty triangles") {
        auto census = triangle_edge_census(icosahedron());
        REQUIRE(census.histogram == std::map<int, int>{{2, 30}});
        REQUIRE(census.triangle_count == 20);
    }
    SECTION("4-cycle is triangle-free") {
        auto census = triangle_edge_census(four_cycle());
        REQUIRE(census.histogram == std::map<int, int>{{0, 4}});
        REQUIRE(census.triangle_count == 0);
    }
    SECTION("edge sum is always divisible by three") {
        std::mt19937 rng(67);
        for (int trial = 0; trial < 100; ++trial) {
            Graph g = oracle::random_graph(rng, 10);
            auto census = triangle_edge_census(g);
            long long sum = 0;
            for (auto [u, v, t] : census.per_edge) sum += t;
            REQUIRE(sum % 3 == 0);
            REQUIRE(sum / 3 == census.triangle_count);
        }
    }
}

TEST_CASE("lambda equals clique order minus two on 1-regular cliques") {
    for (int q = 3; q <= 6; ++q) {
        auto er = edge_regular_params(grid(q));
        REQUIRE(er.holds());
        for (const auto& rc : regular_cliques(grid(q), 1))
            REQUIRE(er->lambda == static_cast<int>(rc.vertices.size()) - 2);
    }
}
