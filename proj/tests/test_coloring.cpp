#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blockpath/coloring.hpp"
#include "blockpath/fixtures.hpp"
#include "blockpath/matcher.hpp"
#include "blockpath/rng.hpp"

#include "oracle_helpers.hpp"

using namespace blockpath;

TEST_CASE("chromatic number of the fixtures") {
    CHECK(chromatic_number(fixture("tt(4)")).chi == 4);
    CHECK(chromatic_number(fixture("directed_cycle(5)")).chi == 3);
    CHECK(chromatic_number(build(6, {}, Mode::oriented)).chi == 1);
    CHECK(chromatic_number(fixture("regular5")).chi == 5);
}

TEST_CASE("certificates carry a proper coloring and real evidence") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(7));
        Digraph d = random_digraph(n, trial % 2 ? Mode::oriented : Mode::general, rng);
        auto cert = chromatic_number(d);
        CHECK(is_proper_coloring(d, cert.coloring));
        std::set<int> distinct(cert.coloring.begin(), cert.coloring.end());
        CHECK(static_cast<int>(distinct.size()) == cert.chi);
        if (cert.clique_is_evidence) {
            CHECK(static_cast<int>(cert.clique.size()) == cert.chi);
            for (size_t a = 0; a < cert.clique.size(); ++a)
                for (size_t b = a + 1; b < cert.clique.size(); ++b)
                    CHECK(((d.adj_mask(cert.clique[a]) >> cert.clique[b]) & 1) == 1);
        } else {
            CHECK(cert.exhaustive_marker);
            CHECK(!is_k_colorable(d, cert.chi - 1).has_value());
        }
    }
}

TEST_CASE("is_k_colorable agrees with the certificate and the oracle") {
    Digraph c5 = fixture("directed_cycle(5)");
    CHECK(!is_k_colorable(c5, 2).has_value());
    auto three = is_k_colorable(c5, 3);
    REQUIRE(three.has_value());
    CHECK(is_proper_coloring(c5, *three));
    // any orientation of K5 is not 4-colorable
    CHECK(!is_k_colorable(fixture("regular5"), 4).has_value());

    SplitMix64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(6));
        Digraph d = random_digraph(n, Mode::general, rng);
        int chi = chromatic_number(d).chi;
        CHECK(chi == oracle::brute_chromatic(d));
        CHECK(is_k_colorable(d, chi).has_value());
        if (chi > 1) CHECK(!is_k_colorable(d, chi - 1).has_value());
    }
}

TEST_CASE("chi is invariant under reversal") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Digraph d = random_digraph(6, Mode::oriented, rng);
        CHECK(chromatic_number(d).chi == chromatic_number(d.reversed()).chi);
    }
}

TEST_CASE("critical subdigraph extraction") {
    SUBCASE("tt5 plus an isolated vertex collapses to tt5") {
        std::vector<Arc> arcs;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) arcs.emplace_back(i, j);
        Digraph d(6, arcs, Mode::oriented);
        auto res = critical_subdigraph(d, 5);
        CHECK(res.sub == fixture("tt(5)"));
        CHECK(res.vertex_map == std::vector<int>{0, 1, 2, 3, 4});
    }
    SUBCASE("odd cycles are 3-critical already") {
        Digraph c5 = fixture("directed_cycle(5)");
        auto res = critical_subdigraph(c5, 3);
        CHECK(res.sub == c5);
    }
    SUBCASE("tt6 at t=4 yields an order-4 tournament with min degree 3") {
        auto res = critical_subdigraph(fixture("tt(6)"), 4);
        CHECK(res.sub.order() == 4);
        CHECK(res.sub.is_tournament());
        CHECK(chromatic_number(res.sub).chi == 4);
        for (int v = 0; v < 4; ++v) CHECK(res.sub.underlying_degree(v) >= 3);
    }
    SUBCASE("precondition is enforced") {
        CHECK_THROWS_AS(critical_subdigraph(fixture("c3"), 4), PreconditionError);
    }
    SUBCASE("every vertex of the result has underlying degree >= t-1") {
        SplitMix64 rng(47);
        for (int trial = 0; trial < 20; ++trial) {
            Digraph d = random_digraph(7, Mode::oriented, rng);
            int chi = chromatic_number(d).chi;
            if (chi < 3) continue;
            auto res = critical_subdigraph(d, 3);
            CHECK(chromatic_number(res.sub).chi == 3);
            for (int v = 0; v < res.sub.order(); ++v) CHECK(res.sub.underlying_degree(v) >= 2);
        }
    }
}

TEST_CASE("gallai-roy path is long enough and non-extendable") {
    SUBCASE("transitive tournaments have a spanning directed path") {
        auto p = gallai_roy_path(fixture("tt(6)"));
        CHECK(p == std::vector<int>{0, 1, 2, 3, 4, 5});
    }
    SUBCASE("directed C5 gives at least 3 vertices") {
        auto p = gallai_roy_path(fixture("directed_cycle(5)"));
        CHECK(p.size() >= 3);
    }
    SUBCASE("arcless digraph gives a single vertex") {
        auto p = gallai_roy_path(build(4, {}, Mode::oriented));
        CHECK(p.size() == 1);
    }
    SUBCASE("random digraphs: length, arcs, non-extendability") {
        SplitMix64 rng(61);
        for (int trial = 0; trial < 60; ++trial) {
            int n = 1 + static_cast<int>(rng.next_below(7));
            Digraph d = random_digraph(n, trial % 2 ? Mode::oriented : Mode::general, rng);
            auto p = gallai_roy_path(d);
            CHECK(static_cast<int>(p.size()) >= chromatic_number(d).chi);
            uint64_t on = 0;
            for (int v : p) on |= 1ull << v;
            for (size_t t = 0; t + 1 < p.size(); ++t) CHECK(d.has_arc(p[t], p[t + 1]));
            CHECK((d.in_mask(p.front()) & ~on) == 0);
            CHECK((d.out_mask(p.back()) & ~on) == 0);
            if (p.size() >= 2) {
                PathWitness w{p, directed_path_pattern(static_cast<int>(p.size()) - 1)};
                CHECK(verify_witness(d, w));
            }
        }
    }
}

TEST_CASE("in-degree coloring bound checker") {
    SUBCASE("directed C5 with n=2 applies and holds") {
        auto rep = check_lemma21(fixture("directed_cycle(5)"), 2);
        CHECK(rep.applicable_in);
        CHECK(rep.chi == 3);
        CHECK(rep.holds_in);
    }
    SUBCASE("tt5 with n=2 is not applicable: a vertex has in-degree 4") {
        auto rep = check_lemma21(fixture("tt(5)"), 2);
        CHECK(!rep.applicable_in);
        CHECK(rep.max_in_degree == 4);
    }
    SUBCASE("any K5 orientation has a K5, so clique gate fails for n=2") {
        auto rep = check_lemma21(fixture("regular5"), 2);
        CHECK(!rep.applicable_in);
        CHECK(rep.clique_number == 5);
    }
    SUBCASE("out-degree mirror matches the reversed digraph") {
        SplitMix64 rng(77);
        for (int trial = 0; trial < 20; ++trial) {
            Digraph d = random_digraph(6, Mode::oriented, rng);
            auto rep = check_lemma21(d, 2);
            auto mirrored = check_lemma21(d.reversed(), 2);
            CHECK(rep.applicable_out == mirrored.applicable_in);
            if (rep.applicable_out) CHECK(rep.holds_out == mirrored.holds_in);
        }
    }
    CHECK_THROWS_AS(check_lemma21(fixture("c3"), 1), PreconditionError);
}

TEST_CASE("sampled bound property at order 6") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        Digraph d = random_digraph(6, Mode::oriented, rng);
        for (int n = 2; n <= 4; ++n) {
            auto rep = check_lemma21(d, n);
            if (rep.applicable_in) CHECK(rep.holds_in);
            if (rep.applicable_out) CHECK(rep.holds_out);
        }
    }
}
