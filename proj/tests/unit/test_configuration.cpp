#include <doctest.h>

#include "pebbling/configuration.hpp"
#include "pebbling/errors.hpp"
#include "pebbling/graph.hpp"
#include "test_helpers.hpp"

using namespace pebbling;
using test_helpers::random_config;
using test_helpers::random_connected_graph;

TEST_CASE("apply_move on T(P_4)") {
    Graph t = total_graph(build_path(4));
    Configuration c = parse_config(t, "x4:7");
    Move m{t.require_vertex("x4"), t.require_vertex("y34")};
    Configuration after = apply_move(t, c, m);
    CHECK(format_config(t, after) == "x4:5,y34:1");
    CHECK(after.total() == c.total() - 1);
}

TEST_CASE("apply_move on P_2 and its error paths") {
    Graph p = build_path(2);
    Configuration c = parse_config(p, "x1:2");
    Configuration after = apply_move(p, c, Move{0, 1});
    CHECK(format_config(p, after) == "x2:1");
    CHECK(after.total() == 1);

    CHECK_THROWS_AS(apply_move(p, parse_config(p, "x1:1"), Move{0, 1}), IllegalMove);

    Graph p3 = build_path(3);
    CHECK_THROWS_AS(apply_move(p3, parse_config(p3, "x1:2"), Move{0, 2}), IllegalMove);
    CHECK_THROWS_AS(apply_move(p3, parse_config(p3, "x1:2"), Move{0, 7}), IllegalMove);
}

TEST_CASE("move conservation on random cases") {
    Rng rng(555);
    int done = 0;
    while (done < 200) {
        Graph g = random_connected_graph(rng, 2 + static_cast<int>(rng.next_below(6)),
                                         static_cast<int>(rng.next_below(4)));
        Configuration c = random_config(rng, g.vertex_count(), 2 + static_cast<int>(rng.next_below(10)));
        int from = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.vertex_count())));
        if (c.counts[static_cast<std::size_t>(from)] < 2) continue;
        const auto& nb = g.neighbors(from);
        int to = nb[rng.next_below(nb.size())];
        Configuration after = apply_move(g, c, Move{from, to});
        CHECK(after.total() == c.total() - 1);
        int changed = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            changed += after.counts[static_cast<std::size_t>(v)] != c.counts[static_cast<std::size_t>(v)];
        CHECK(changed == 2);
        CHECK(after.counts[static_cast<std::size_t>(from)] == c.counts[static_cast<std::size_t>(from)] - 2);
        CHECK(after.counts[static_cast<std::size_t>(to)] == c.counts[static_cast<std::size_t>(to)] + 1);
        ++done;
    }
}

TEST_CASE("configuration text format") {
    Graph t = total_graph(build_path(4));

    Configuration c = parse_config(t, "x4:7,y23:1");
    CHECK(c.total() == 8);
    CHECK(c.support() == 2);
    CHECK(c.counts[t.require_vertex("x4")] == 7);
    CHECK(format_config(t, c) == "x4:7,y23:1");

    CHECK(parse_config(t, "  x1: 3 , y34 :2 ").total() == 5);
    CHECK(parse_config(t, "").total() == 0);
    CHECK(parse_config(t, "x1:0").support() == 0);

    CHECK_THROWS_AS(parse_config(t, "z9:1"), ParseError);
    CHECK_THROWS_AS(parse_config(t, "x1:1,x1:2"), ParseError);
    CHECK_THROWS_AS(parse_config(t, "x1:-2"), ParseError);
    CHECK_THROWS_AS(parse_config(t, "x1"), ParseError);
}

TEST_CASE("labels containing commas parse back") {
    Graph t10 = total_graph(build_path(10));
    Configuration c = parse_config(t10, "y9,10:3,x1:2");
    CHECK(c.counts[t10.require_vertex("y9,10")] == 3);
    CHECK(c.counts[t10.require_vertex("x1")] == 2);
    CHECK(parse_config(t10, format_config(t10, c)) == c);

    Graph tc = total_graph(build_cycle(3));
    Configuration d = parse_config(tc, "e(v1,v2):4");
    CHECK(d.counts[tc.require_vertex("e(v1,v2)")] == 4);
    CHECK(parse_config(tc, format_config(tc, d)) == d);
}

TEST_CASE("support counts occupied vertices") {
    Graph p = build_path(4);
    Configuration c = parse_config(p, "x1:2,x3:1");
    CHECK(c.support() == 2);
    CHECK(c.total() == 3);
    CHECK_THROWS_AS(validate_config(p, Configuration{{1, 2}}), InvalidParameter);
    CHECK_THROWS_AS(validate_config(p, Configuration{{1, -1, 0, 0}}), InvalidParameter);
}
