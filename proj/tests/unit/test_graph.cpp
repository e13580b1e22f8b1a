#include <doctest.h>

#include <set>
#include <sstream>

#include "pebbling/errors.hpp"
#include "pebbling/graph.hpp"
#include "test_helpers.hpp"

using namespace pebbling;
using test_helpers::brute_isomorphic;
using test_helpers::independent_bfs;
using test_helpers::random_connected_graph;

TEST_CASE("path builder") {
    Graph p1 = build_path(1);
    CHECK(p1.vertex_count() == 1);
    CHECK(p1.edge_count() == 0);

    Graph p2 = build_path(2);
    CHECK(p2.vertex_count() == 2);
    CHECK(p2.edge_count() == 1);
    CHECK(p2.label(0) == "x1");

    Graph p5 = build_path(5);
    CHECK(p5.vertex_count() == 5);
    CHECK(p5.edge_count() == 4);
    CHECK(p5.distance(0, 4) == 4);

    CHECK_THROWS_AS(build_path(0), InvalidParameter);
}

TEST_CASE("complete and cycle builders") {
    Graph k3 = build_complete(3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.eccentricity(0) == 1);

    Graph c4 = build_cycle(4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.eccentricity(0) == 2);

    CHECK(brute_isomorphic(build_cycle(3), build_complete(3)));

    CHECK_THROWS_AS(build_cycle(2), InvalidParameter);
    CHECK_THROWS_AS(build_complete(0), InvalidParameter);
}

TEST_CASE("total graph of P_2 is a triangle") {
    Graph t = total_graph(build_path(2));
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);
    CHECK(brute_isomorphic(t, build_complete(3)));
    CHECK(t.total_path_order() == 2);
}

TEST_CASE("total graph of P_3, exact edge set") {
    Graph t = total_graph(build_path(3));
    REQUIRE(t.vertex_count() == 5);
    REQUIRE(t.edge_count() == 7);

    auto has_edge = [&](const char* a, const char* b) {
        return t.adjacent(t.require_vertex(a), t.require_vertex(b));
    };
    CHECK(has_edge("x1", "x2"));
    CHECK(has_edge("x2", "x3"));
    CHECK(has_edge("y12", "y23"));
    CHECK(has_edge("x1", "y12"));
    CHECK(has_edge("x2", "y12"));
    CHECK(has_edge("x2", "y23"));
    CHECK(has_edge("x3", "y23"));
    CHECK_FALSE(has_edge("x1", "x3"));
    CHECK_FALSE(has_edge("x1", "y23"));
    CHECK_FALSE(has_edge("x3", "y12"));
}

TEST_CASE("total graph of P_4") {
    Graph t = total_graph(build_path(4));
    CHECK(t.vertex_count() == 7);
    CHECK(t.edge_count() == 11);   // 4n-5
    CHECK(t.distance(t.require_vertex("x4"), t.require_vertex("x1")) == 3);
    CHECK(t.total_path_order() == 4);
}

TEST_CASE("total graph edge labels") {
    Graph t10 = total_graph(build_path(10));
    CHECK(t10.vertex_by_label("y89").has_value());
    CHECK(t10.vertex_by_label("y9,10").has_value());

    // non-path substrate falls back to e(u,v) with sorted endpoints
    Graph tc = total_graph(build_cycle(3));
    CHECK(tc.vertex_by_label("e(v1,v2)").has_value());
    CHECK(tc.vertex_by_label("e(v1,v3)").has_value());
    CHECK_FALSE(tc.total_path_order().has_value());

    // total of a non-canonical graph is not tagged as a path total
    Graph tt = total_graph(total_graph(build_path(2)));
    CHECK_FALSE(tt.total_path_order().has_value());
}

TEST_CASE("total graph edge count formula on random graphs") {
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        int nv = 2 + static_cast<int>(rng.next_below(5));
        Graph g = random_connected_graph(rng, nv, static_cast<int>(rng.next_below(4)));
        long long expected = 3LL * g.edge_count();
        for (int v = 0; v < nv; ++v) {
            long long d = g.degree(v);
            expected += d * (d - 1) / 2;
        }
        Graph t = total_graph(g);
        CHECK(t.vertex_count() == g.vertex_count() + g.edge_count());
        CHECK(t.edge_count() == expected);
    }
}

TEST_CASE("cartesian product basics") {
    Graph k2 = build_complete(2);
    CHECK(brute_isomorphic(cartesian_product(k2, k2), build_cycle(4)));

    Graph p23 = cartesian_product(build_path(2), build_path(3));
    CHECK(p23.vertex_count() == 6);
    CHECK(p23.edge_count() == 7);

    Graph t3 = total_graph(build_path(3));
    Graph prod = cartesian_product(t3, t3);
    CHECK(prod.vertex_count() == 25);
    CHECK(prod.edge_count() == 70);
    CHECK(prod.vertex_by_label("(x1,y23)").has_value());
}

TEST_CASE("cartesian product distance additivity") {
    Rng rng(77);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = random_connected_graph(rng, 2 + static_cast<int>(rng.next_below(5)),
                                         static_cast<int>(rng.next_below(3)));
        Graph h = random_connected_graph(rng, 2 + static_cast<int>(rng.next_below(5)),
                                         static_cast<int>(rng.next_below(3)));
        Graph prod = cartesian_product(g, h);
        const int nh = h.vertex_count();
        for (int a = 0; a < g.vertex_count(); ++a)
            for (int b = 0; b < nh; ++b)
                for (int c = 0; c < g.vertex_count(); ++c)
                    for (int d = 0; d < nh; ++d)
                        CHECK(prod.distance(a * nh + b, c * nh + d) ==
                              g.distance(a, c) + h.distance(b, d));
    }
}

TEST_CASE("construction invariants on random graphs") {
    Rng rng(9001);
    for (int trial = 0; trial < 50; ++trial) {
        int nv = 2 + static_cast<int>(rng.next_below(6));
        Graph g = random_connected_graph(rng, nv, static_cast<int>(rng.next_below(5)));

        for (int v = 0; v < nv; ++v) {
            const auto& nb = g.neighbors(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
            for (int u : nb) {
                CHECK(u != v);
                CHECK(g.adjacent(u, v));
            }
        }
        for (int v = 0; v < nv; ++v) {
            std::vector<int> dist = independent_bfs(g, v);
            for (int u = 0; u < nv; ++u) {
                CHECK(g.distance(v, u) == dist[static_cast<std::size_t>(u)]);
                CHECK((g.distance(v, u) == 1) == g.adjacent(v, u));
            }
            CHECK(g.distance(v, v) == 0);
        }
        // triangle inequality through any intermediate vertex
        for (int a = 0; a < nv; ++a)
            for (int b = 0; b < nv; ++b)
                for (int c = 0; c < nv; ++c)
                    CHECK(g.distance(a, b) <= g.distance(a, c) + g.distance(c, b));
    }
}

TEST_CASE("graph construction errors") {
    CHECK_THROWS_AS(Graph::make({"a", "a"}, {}, "bad"), InvalidParameter);
    CHECK_THROWS_AS(Graph::make({"a", "b"}, {{0, 0}}, "loop"), InvalidParameter);
    CHECK_THROWS_AS(Graph::make({"a", "b"}, {{0, 1}, {1, 0}}, "dup"), InvalidParameter);
    CHECK_THROWS_AS(Graph::make({"a", "b", "c"}, {{0, 1}}, "disc"), InvalidParameter);
}

TEST_CASE("edge list round trip") {
    Graph t = total_graph(build_path(3));
    std::stringstream buf;
    write_edge_list(buf, t);
    Graph back = read_edge_list(buf, "back");
    REQUIRE(back.vertex_count() == t.vertex_count());
    CHECK(back.edge_count() == t.edge_count());
    for (int v = 0; v < t.vertex_count(); ++v) {
        CHECK(back.label(v) == t.label(v));
        CHECK(back.neighbors(v) == t.neighbors(v));
    }

    std::stringstream bad("3 1\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad, "disc"), InvalidParameter);
}
