#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toric/combinatorics.hpp"
#include "toric/errors.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace toric;
using namespace toric::comb;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(50, 25) == BigInt("126410606437752"));
    for (int n = 1; n <= 12; ++n) {
        for (int k = 1; k < n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("enumerate_pst base cases") {
    for (int n : {1, 2, 5}) {
        auto only_zero = enumerate_pst(n, 0);
        REQUIRE(only_zero.size() == 1);
        CHECK(only_zero[0] == ExponentVector(static_cast<std::size_t>(n), 0));
    }
    auto p21 = enumerate_pst(2, 1);
    CHECK(std::set<ExponentVector>(p21.begin(), p21.end()) ==
          std::set<ExponentVector>{{-1, 1}, {0, 0}, {1, -1}});
    CHECK(enumerate_pst(3, 2).size() == 19);
}

TEST_CASE("enumerate_pst matches the membership-characterization oracle") {
    for (int n = 1; n <= 5; ++n) {
        for (int s = 0; s <= 3; ++s) {
            auto got = enumerate_pst(n, s);
            auto want = oracle::pst_dfs(n, s);
            CHECK(std::set<ExponentVector>(got.begin(), got.end()) == want);
            CHECK(std::is_sorted(got.begin(), got.end()));
        }
    }
}

TEST_CASE("counts agree with the crystal ball closed form") {
    for (int n = 1; n <= 6; ++n) {
        for (int s = 0; s <= 4; ++s) {
            CHECK(BigInt(enumerate_pst(n, s).size()) == crystal_ball(n, s));
        }
    }
}

TEST_CASE("symmetry of exponent sets") {
    for (int n : {2, 3, 4}) {
        for (int s : {1, 2, 3}) {
            auto all = enumerate_pst(n, s);
            std::set<ExponentVector> members(all.begin(), all.end());
            CHECK(members.count(ExponentVector(static_cast<std::size_t>(n), 0)) == 1);
            CHECK(all.size() % 2 == 1);
            for (const auto& k : all) {
                ExponentVector neg(k.size());
                for (std::size_t i = 0; i < k.size(); ++i) neg[i] = -k[i];
                CHECK(members.count(neg) == 1);
            }
        }
    }
}

TEST_CASE("crystal ball closed forms") {
    for (int n = 1; n <= 50; ++n) {
        CHECK(crystal_ball(n, 1) == BigInt(n) * (n - 1) + 1);
    }
    for (int t = 0; t <= 20; ++t) {
        CHECK(crystal_ball(2, t) == 2 * t + 1);
        CHECK(crystal_ball(1, t) == 1);
    }
    CHECK(crystal_ball(3, 2) == 19);
}

TEST_CASE("crystal ball monotonicity") {
    for (int n = 1; n <= 8; ++n) {
        for (int t = 0; t <= 8; ++t) {
            CHECK(crystal_ball(n, t) <= crystal_ball(n, t + 1));
            CHECK(crystal_ball(n, t) <= crystal_ball(n + 1, t));
        }
    }
}

TEST_CASE("minimal design size bound") {
    CHECK(min_design_size(6, 2) == 31);
    CHECK(min_design_size(7, 2) == 43);
    for (int n : {1, 2, 9}) CHECK(min_design_size(n, 1) == 1);
    CHECK(min_design_size(3, 4) == 19);  // G_2(2)
    CHECK(min_design_size(3, 5) == 19);  // floor(5/2) = 2
    CHECK_THROWS_AS(min_design_size(3, 0), UsageError);
}

TEST_CASE("plus-minus representatives") {
    for (int n = 1; n <= 5; ++n) {
        for (int s = 0; s <= 3; ++s) {
            auto reps = pst_representatives(n, s);
            CHECK(BigInt(2 * reps.size() + 1) == crystal_ball(n, s));
            std::set<ExponentVector> all(reps.begin(), reps.end());
            for (const auto& k : reps) {
                auto lead = std::find_if(k.begin(), k.end(), [](int v) { return v != 0; });
                REQUIRE(lead != k.end());
                CHECK(*lead > 0);
                ExponentVector neg(k.size());
                for (std::size_t i = 0; i < k.size(); ++i) neg[i] = -k[i];
                CHECK(all.count(neg) == 0);
            }
        }
    }
    auto reps21 = pst_representatives(2, 1);
    REQUIRE(reps21.size() == 1);
    CHECK(reps21[0] == ExponentVector{1, -1});
}

TEST_CASE("argument validation and resource guard") {
    CHECK_THROWS_AS(crystal_ball(0, 1), UsageError);
    CHECK_THROWS_AS(crystal_ball(2, -1), UsageError);
    CHECK_THROWS_AS(enumerate_pst(40, 12), ResourceError);
}
