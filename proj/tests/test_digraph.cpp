#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blockpath/digraph.hpp"
#include "blockpath/fixtures.hpp"
#include "blockpath/io.hpp"
#include "blockpath/rng.hpp"

using namespace blockpath;

TEST_CASE("build accepts the directed 3-cycle") {
    Digraph d = build(3, {{0, 1}, {1, 2}, {2, 0}}, Mode::oriented);
    CHECK(d.order() == 3);
    CHECK(d.arc_count() == 3);
    CHECK(d.has_arc(0, 1));
    CHECK(!d.has_arc(1, 0));
    CHECK(d.is_tournament());
}

TEST_CASE("build rejects each malformed arc set with a distinct error") {
    auto kind_of = [](auto fn) {
        try {
            fn();
        } catch (const GraphError& e) {
            return e.kind;
        }
        return GraphError::Kind::not_applicable;
    };
    CHECK(kind_of([] { build(2, {{0, 0}}, Mode::oriented); }) == GraphError::Kind::loop);
    CHECK(kind_of([] { build(2, {{0, 1}, {0, 1}}, Mode::oriented); }) == GraphError::Kind::duplicate_arc);
    CHECK(kind_of([] { build(2, {{0, 1}, {1, 0}}, Mode::oriented); }) == GraphError::Kind::digon);
    CHECK(kind_of([] { build(2, {{0, 2}}, Mode::oriented); }) == GraphError::Kind::vertex_out_of_range);
    // the same digon is fine in general mode
    CHECK(build(2, {{0, 1}, {1, 0}}, Mode::general).arc_count() == 2);
}

TEST_CASE("transitive tournament degrees") {
    Digraph tt5 = fixture("tt(5)");
    auto info = degrees(tt5, 0);
    CHECK(info.out_degree == 4);
    CHECK(info.in_degree == 0);
    CHECK(info.out_neighbors == std::vector<int>{1, 2, 3, 4});
    CHECK(info.in_neighbors.empty());
    auto c3 = fixture("c3");
    auto i0 = degrees(c3, 0);
    CHECK(i0.out_degree == 1);
    CHECK(i0.in_degree == 1);
    CHECK(i0.out_neighbors == std::vector<int>{1});
    CHECK(i0.in_neighbors == std::vector<int>{2});
    Digraph arcless = build(4, {}, Mode::oriented);
    CHECK(degrees(arcless, 2).out_degree == 0);
    CHECK(degrees(arcless, 2).in_degree == 0);
    CHECK_THROWS_AS(degrees(arcless, 4), GraphError);
}

TEST_CASE("reverse is an involution and swaps degrees") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(6));
        Mode mode = trial % 2 ? Mode::oriented : Mode::general;
        Digraph d = random_digraph(n, mode, rng);
        Digraph r = d.reversed();
        CHECK(r.reversed() == d);
        for (int v = 0; v < n; ++v) {
            CHECK(r.out_degree(v) == d.in_degree(v));
            CHECK(r.in_degree(v) == d.out_degree(v));
        }
    }
    Digraph c3 = fixture("c3");
    Digraph r = c3.reversed();
    CHECK(r.has_arc(1, 0));
    CHECK(r.has_arc(0, 2));
}

TEST_CASE("induced subdigraphs relabel densely") {
    Digraph tt5 = fixture("tt(5)");
    SUBCASE("full set is the identity") {
        std::vector<int> map;
        CHECK(tt5.induced(tt5.full_mask(), &map) == tt5);
        CHECK(map == std::vector<int>{0, 1, 2, 3, 4});
    }
    SUBCASE("empty set is the empty digraph") {
        CHECK(tt5.induced(0).order() == 0);
    }
    SUBCASE("tt5 on {0,2,4} is tt3") {
        std::vector<int> map;
        Digraph sub = tt5.induced(vertices_to_mask({0, 2, 4}, 5), &map);
        CHECK(map == std::vector<int>{0, 2, 4});
        CHECK(sub == fixture("tt(3)"));
    }
    CHECK_THROWS_AS(tt5.induced(1ull << 5), GraphError);
}

TEST_CASE("named fixtures have the advertised regularity") {
    Digraph r5 = fixture("regular5");
    CHECK(r5.order() == 5);
    CHECK(r5.is_tournament());
    for (int v = 0; v < 5; ++v) {
        CHECK(r5.out_degree(v) == 2);
        CHECK(r5.in_degree(v) == 2);
    }
    Digraph p7 = fixture("paley7");
    CHECK(p7.order() == 7);
    CHECK(p7.is_tournament());
    for (int v = 0; v < 7; ++v) CHECK(p7.out_degree(v) == 3);
    // arc (u,v) iff v-u is a nonzero square mod 7
    for (int u = 0; u < 7; ++u)
        for (int v = 0; v < 7; ++v) {
            if (u == v) continue;
            int diff = ((v - u) % 7 + 7) % 7;
            bool square = diff == 1 || diff == 2 || diff == 4;
            CHECK(p7.has_arc(u, v) == square);
        }
    CHECK_THROWS_AS(fixture("nonsense"), GraphError);
}

TEST_CASE("edge-list round trip") {
    Digraph c3 = fixture("c3");
    CHECK(parse_edge_list(serialize_edge_list(c3)) == c3);

    SplitMix64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        Mode mode = trial % 2 ? Mode::oriented : Mode::general;
        Digraph d = random_digraph(n, mode, rng);
        CHECK(parse_edge_list(serialize_edge_list(d)) == d);
    }
}

TEST_CASE("edge-list rejects malformed input") {
    CHECK_THROWS_AS(parse_edge_list("dg 3 2 oriented\n0 1\n"), ParseError);     // count mismatch
    CHECK_THROWS_AS(parse_edge_list("graph 3 1 oriented\n0 1\n"), ParseError);  // bad header
    CHECK_THROWS_AS(parse_edge_list("dg 3 2 oriented\n0 1\n1 0\n"), ParseError);  // digon in oriented
    // comments and blank lines are fine
    Digraph d = parse_edge_list("# comment\ndg 2 1 oriented\n\n0 1  # arc\n");
    CHECK(d.arc_count() == 1);
}

TEST_CASE("digraph6 round trip") {
    Digraph c3 = fixture("c3");
    Digraph back = parse_digraph6(serialize_digraph6(c3));
    CHECK(back.order() == 3);
    CHECK(back.arcs() == c3.arcs());

    SplitMix64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(9));
        Digraph d = random_digraph(n, Mode::general, rng);
        Digraph rt = parse_digraph6(serialize_digraph6(d));
        CHECK(rt.order() == d.order());
        CHECK(rt.arcs() == d.arcs());
    }
    CHECK_THROWS_AS(parse_digraph6("no header"), ParseError);
    CHECK_THROWS_AS(parse_digraph6("&"), ParseError);
}
