#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blockpath/gseq.hpp"

using namespace blockpath;

TEST_CASE("g base cases and hand-evaluated values") {
    CHECK(g(4, 0) == 4);
    CHECK(g(4, 1) == 4);
    // g(5,1) = g(4,0) + 2*2 = 8; g(6,2) = g(5,1) + 2*3 = 14; g(7,2) = g(6,1) + 2*4
    CHECK(g(5, 1) == 8);
    CHECK(g(6, 1) == 11);
    CHECK(g(6, 2) == 14);
    CHECK(g(7, 2) == 19);
}

TEST_CASE("g domain is enforced") {
    CHECK_THROWS_AS(g(3, 0), std::domain_error);
    CHECK_THROWS_AS(g(4, 2), std::domain_error);
    CHECK_THROWS_AS(g(5, 2), std::domain_error);  // i <= (5-2)/2 = 1
    CHECK_THROWS_AS(g(6, -1), std::domain_error);
    CHECK(g_in_domain(6, 2));
    CHECK(!g_in_domain(6, 3));
}

TEST_CASE("monotonicity in i for m up to 100") {
    for (int m = 4; m <= 100; ++m)
        for (int i = 1; g_in_domain(m, i); ++i) CHECK(g(m, i) >= g(m, i - 1));
}

TEST_CASE("extreme values match the closed forms") {
    CHECK(g_extreme(4) == 4);  // the seeded value, not the even closed form
    CHECK(g_extreme(5) == 8);
    CHECK(g_extreme(6) == 14);
    for (int m = 6; m <= 200; m += 2) CHECK(4 * g_extreme(m) == 3LL * m * m - 12 * m + 20);
    for (int m = 5; m <= 199; m += 2) CHECK(4 * g_extreme(m) == 3LL * m * m - 14 * m + 27);
    // the quadratic bound itself
    for (int m = 4; m <= 200; ++m) CHECK(4 * g_extreme(m) <= 3LL * m * m);
}

TEST_CASE("f upper bound takes the better published bound") {
    CHECK(f_upper_bound(4) == 4);    // min(4, 9)
    CHECK(f_upper_bound(6) == 14);   // min(14, 25)
    CHECK(f_upper_bound(10) == 50);  // min(50, 81)
    CHECK_THROWS_AS(f_upper_bound(3), std::domain_error);
}
