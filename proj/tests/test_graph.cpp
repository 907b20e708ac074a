#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "regclique/distance.hpp"
#include "regclique/graph.hpp"
#include "regclique/isomorphism.hpp"

using namespace regclique;

TEST_CASE("from_edge_list") {
    SECTION("triangle") {
        Graph g = from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
        REQUIRE(g.order() == 3);
        REQUIRE(g.edge_count() == 3);
        REQUIRE(g.adjacent(0, 1));
        REQUIRE(g.adjacent(1, 0));
    }
    SECTION("empty graph on two vertices") {
        Graph g = from_edge_list(2, {});
        REQUIRE(g.order() == 2);
        REQUIRE(g.edge_count() == 0);
    }
    SECTION("duplicate edges collapse") {
        Graph g = from_edge_list(4, {{0, 1}, {0, 1}});
        REQUIRE(g.edge_count() == 1);
    }
    SECTION("errors") {
        REQUIRE_THROWS_AS(from_edge_list(3, {{0, 3}}), std::invalid_argument);
        REQUIRE_THROWS_AS(from_edge_list(3, {{1, 1}}), std::invalid_argument);
        REQUIRE_THROWS_AS(from_edge_list(0, {}), std::invalid_argument);
    }
}

TEST_CASE("complete_graph") {
    REQUIRE(complete_graph(4).edge_count() == 6);
    REQUIRE(complete_graph(1).order() == 1);
    REQUIRE(complete_graph(1).edge_count() == 0);
    Graph k5 = complete_graph(5);
    for (int v = 0; v < 5; ++v) REQUIRE(k5.degree(v) == 4);
    REQUIRE_THROWS_AS(complete_graph(0), std::invalid_argument);
}

TEST_CASE("cartesian_product") {
    SECTION("K3 box K3 is the 3x3 grid") {
        Graph g = cartesian_product(complete_graph(3), complete_graph(3));
        REQUIRE(g.order() == 9);
        for (int v = 0; v < 9; ++v) REQUIRE(g.degree(v) == 4);
    }
    SECTION("K1 box H is H") {
        Graph h = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
        Graph p = cartesian_product(complete_graph(1), h);
        REQUIRE(p == h);
    }
    SECTION("K2 box K2 is the 4-cycle") {
        Graph p = cartesian_product(complete_graph(2), complete_graph(2));
        // brute-force adjacency check on the 4 vertices (0,0)=0,(0,1)=1,(1,0)=2,(1,1)=3
        REQUIRE(p.order() == 4);
        REQUIRE(p.edge_count() == 4);
        REQUIRE(p.adjacent(0, 1));
        REQUIRE(p.adjacent(0, 2));
        REQUIRE(p.adjacent(1, 3));
        REQUIRE(p.adjacent(2, 3));
        REQUIRE_FALSE(p.adjacent(0, 3));
        REQUIRE_FALSE(p.adjacent(1, 2));
    }
    SECTION("degree law on random pairs") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            Graph g = oracle::random_graph(rng, 6);
            Graph h = oracle::random_graph(rng, 6);
            Graph p = cartesian_product(g, h);
            for (int a = 0; a < g.order(); ++a)
                for (int b = 0; b < h.order(); ++b)
                    REQUIRE(p.degree(a * h.order() + b) == g.degree(a) + h.degree(b));
        }
    }
}

TEST_CASE("grid") {
    REQUIRE(grid(3) == cartesian_product(complete_graph(3), complete_graph(3)));
    SECTION("q = 2 is the 4-cycle") {
        Graph g = grid(2);
        REQUIRE(g.order() == 4);
        REQUIRE(g.edge_count() == 4);
        for (int v = 0; v < 4; ++v) REQUIRE(g.degree(v) == 2);
    }
    REQUIRE_THROWS_AS(grid(1), std::invalid_argument);
}

TEST_CASE("icosahedron") {
    Graph ico = icosahedron();
    REQUIRE(ico.order() == 12);
    REQUIRE(ico.edge_count() == 30);
    for (int v = 0; v < 12; ++v) REQUIRE(ico.degree(v) == 5);

    SECTION("every edge lies in exactly two triangles") {
        for (auto [u, v] : ico.edges()) REQUIRE(oracle::common_neighbours(ico, u, v) == 2);
    }
    SECTION("each vertex has a unique vertex at distance 3") {
        auto dist = oracle::matrix_power_distances(ico);
        for (int u = 0; u < 12; ++u) {
            int far = 0;
            for (int v = 0; v < 12; ++v)
                if (dist[u][v] == 3) ++far;
            REQUIRE(far == 1);
        }
    }
}

TEST_CASE("disjoint_union") {
    Graph k3 = complete_graph(3);
    SECTION("two triangles") {
        Graph g = disjoint_union({k3, k3});
        REQUIRE(g.order() == 6);
        REQUIRE(g.edge_count() == 6);
        REQUIRE_FALSE(g.adjacent(0, 3));
        REQUIRE(g.adjacent(3, 4));
    }
    SECTION("identity on one graph") { REQUIRE(disjoint_union({k3}) == k3); }
    SECTION("perfect matching from three K2") {
        Graph k2 = complete_graph(2);
        Graph g = disjoint_union({k2, k2, k2});
        REQUIRE(g.order() == 6);
        REQUIRE(g.edge_count() == 3);
        for (int v = 0; v < 6; ++v) REQUIRE(g.degree(v) == 1);
    }
    SECTION("empty list is an error") {
        REQUIRE_THROWS_AS(disjoint_union(std::vector<Graph>{}), std::invalid_argument);
    }
}

TEST_CASE("distances and diameter") {
    SECTION("K4 all off-diagonal one") {
        auto dt = distances(complete_graph(4));
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v) REQUIRE(dt.at(u, v) == (u == v ? 0 : 1));
    }
    SECTION("path") {
        Graph p = from_edge_list(3, {{0, 1}, {1, 2}});
        REQUIRE(distances(p).at(0, 2) == 2);
    }
    SECTION("icosahedron max finite entry 3") {
        auto dt = distances(icosahedron());
        int best = 0;
        for (int u = 0; u < 12; ++u) best = std::max(best, dt.eccentricity(u));
        REQUIRE(best == 3);
        REQUIRE(diameter(icosahedron()) == 3);
    }
    SECTION("diameter values") {
        REQUIRE(diameter(complete_graph(5)) == 1);
        Graph matching = disjoint_union({complete_graph(2), complete_graph(2)});
        REQUIRE_FALSE(diameter(matching).has_value());
    }
    SECTION("agrees with the matrix-power oracle on random graphs") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 60; ++trial) {
            Graph g = oracle::random_graph(rng, 10);
            auto dt = distances(g);
            auto expect = oracle::matrix_power_distances(g);
            for (int u = 0; u < g.order(); ++u)
                for (int v = 0; v < g.order(); ++v) REQUIRE(dt.at(u, v) == expect[u][v]);
        }
    }
    SECTION("symmetry and triangle inequality") {
        std::mt19937 rng(13);
        for (int trial = 0; trial < 30; ++trial) {
            Graph g = oracle::random_graph(rng, 9);
            auto dt = distances(g);
            for (int u = 0; u < g.order(); ++u) {
                REQUIRE(dt.at(u, u) == 0);
                for (int v = 0; v < g.order(); ++v) {
                    REQUIRE(dt.at(u, v) == dt.at(v, u));
                    REQUIRE((dt.at(u, v) == 1) == g.adjacent(u, v));
                    for (int w = 0; w < g.order(); ++w)
                        if (dt.reachable(u, v) && dt.reachable(v, w))
                            REQUIRE(dt.at(u, w) <= dt.at(u, v) + dt.at(v, w));
                }
            }
        }
    }
}
