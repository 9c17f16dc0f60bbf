#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "blockpath/enumerate.hpp"
#include "blockpath/fixtures.hpp"
#include "blockpath/rng.hpp"

#include "oracle_helpers.hpp"

using namespace blockpath;

namespace {

Digraph permuted(const Digraph& d, const std::vector<int>& perm) {
    std::vector<Arc> arcs;
    for (const auto& [u, v] : d.arcs()) arcs.emplace_back(perm[u], perm[v]);
    return Digraph(d.order(), arcs, d.mode());
}

}  // namespace

TEST_CASE("canonical form is invariant under every relabeling (n <= 6)") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(5));
        Digraph d = random_digraph(n, trial % 2 ? Mode::oriented : Mode::general, rng);
        std::string form = canonical_form(d);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            CHECK(canonical_form(permuted(d, perm)) == form);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("canonical form is invariant under sampled relabelings (n <= 8)") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 7 + static_cast<int>(rng.next_below(2));
        Digraph d = random_digraph(n, Mode::oriented, rng);
        std::string form = canonical_form(d);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int shuffle = 0; shuffle < 30; ++shuffle) {
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.next_below(i + 1)]);
            CHECK(canonical_form(permuted(d, perm)) == form);
        }
    }
}

TEST_CASE("canonical forms separate non-isomorphic digraphs") {
    CHECK(canonical_form(fixture("c3")) != canonical_form(fixture("tt(3)")));
    Digraph tt5 = fixture("tt(5)");
    std::vector<int> perm{3, 0, 4, 1, 2};
    CHECK(canonical_form(permuted(tt5, perm)) == canonical_form(tt5));
    CHECK(isomorphic(permuted(tt5, perm), tt5));
    CHECK(!isomorphic(fixture("c3"), fixture("tt(3)")));
    CHECK_THROWS_AS(canonical_form(fixture("tt(11)")), GraphError);
}

TEST_CASE("tournament enumeration matches the labeled-dedupe oracle") {
    // small orders against the permutation oracle
    for (int n = 1; n <= 4; ++n) {
        auto reps = enumerate_tournaments(n);
        for (size_t a = 0; a < reps.size(); ++a)
            for (size_t b = a + 1; b < reps.size(); ++b)
                CHECK(!oracle::brute_isomorphic(reps[a], reps[b]));
        // every labeled tournament is isomorphic to some representative
        uint64_t labeled = 0;
        for_each_labeled_digraph(n, Mode::oriented, [&](const Digraph& d) {
            if (d.is_tournament()) {
                ++labeled;
                bool found = false;
                for (const auto& r : reps)
                    if (oracle::brute_isomorphic(d, r)) {
                        found = true;
                        break;
                    }
                CHECK(found);
            }
            return true;
        });
        CHECK(labeled == (1ull << (n * (n - 1) / 2)));
    }
    CHECK(count_tournaments(1) == 1);
    CHECK(count_tournaments(2) == 1);
    CHECK(count_tournaments(3) == 2);
    CHECK(count_tournaments(4) == 4);
    CHECK(count_tournaments(5) == 12);
    CHECK(count_tournaments(6) == 56);
}

TEST_CASE("tournament counts at n=5,6 equal labeled enumeration plus dedupe") {
    for (int n = 5; n <= 6; ++n) {
        std::set<std::string> forms;
        for_each_labeled_digraph(n, Mode::oriented, [&](const Digraph& d) {
            if (d.is_tournament()) forms.insert(canonical_form(d));
            return true;
        });
        CHECK(forms.size() == count_tournaments(n));
    }
}

TEST_CASE("every enumerated tournament is oriented and complete") {
    for (int n = 1; n <= 6; ++n)
        for_each_tournament(n, [&](const Digraph& t) {
            CHECK(t.is_tournament());
            CHECK(!t.has_digon());
            CHECK(t.arc_count() == n * (n - 1) / 2);
        });
}

TEST_CASE("labeled digraph counts") {
    CHECK(labeled_digraph_count(3, Mode::oriented) == 27);
    CHECK(labeled_digraph_count(3, Mode::general) == 64);
    uint64_t seen = for_each_labeled_digraph(3, Mode::oriented, [](const Digraph&) { return true; });
    CHECK(seen == 27);
    seen = for_each_labeled_digraph(3, Mode::general, [](const Digraph&) { return true; });
    CHECK(seen == 64);
    // n=2 oriented: 3 labeled, 2 up to isomorphism
    CHECK(enumerate_digraphs_deduped(2, Mode::oriented).size() == 2);
    CHECK_THROWS_AS(for_each_labeled_digraph(9, Mode::oriented, [](const Digraph&) { return true; }),
                    GraphError);
}

TEST_CASE("prefix shards partition the labeled stream") {
    for (Mode mode : {Mode::oriented, Mode::general}) {
        std::vector<std::string> whole;
        for_each_labeled_digraph(4, mode, [&](const Digraph& d) {
            whole.push_back(serialize_edge_list(d));
            return true;
        });
        std::vector<std::string> sharded;
        for (int shard = 0; shard < static_cast<int>(pair_states(mode)); ++shard)
            for_each_labeled_digraph(4, mode, [&](const Digraph& d) {
                sharded.push_back(serialize_edge_list(d));
                return true;
            }, 6, shard);
        std::sort(whole.begin(), whole.end());
        std::sort(sharded.begin(), sharded.end());
        CHECK(whole == sharded);
    }
}
