#include <doctest.h>

#include <algorithm>
#include <set>

#include "k3maps/constraints.hpp"

using namespace k3maps;

namespace {

// Independent oracle: grow parts from the smallest up, no ordering tricks
// shared with the library implementation.
void oracle_rec(Int remaining, Int min_part, Int sum, std::vector<Int>& acc,
                std::set<std::vector<Int>>& out) {
    if (remaining == 0) {
        if (sum % 2 == 0 && !acc.empty()) {
            std::vector<Int> parts(acc.rbegin(), acc.rend());
            out.insert(parts);
        }
        return;
    }
    for (Int b = min_part; b * b <= remaining; ++b) {
        acc.push_back(b);
        oracle_rec(remaining - b * b, b, sum + b, acc, out);
        acc.pop_back();
    }
}

std::set<std::vector<Int>> oracle_partitions(Int n) {
    std::set<std::vector<Int>> out;
    std::vector<Int> acc;
    oracle_rec(n, 1, 0, acc, out);
    return out;
}

} // namespace

TEST_CASE("square root of degree") {
    CHECK(square_root_degree(4) == 2);
    CHECK(square_root_degree(9) == 3);
    CHECK(square_root_degree(1) == 1);
    CHECK(square_root_degree(152399025) == 12345);
    CHECK_FALSE(square_root_degree(5).has_value());
    CHECK_FALSE(square_root_degree(8).has_value());
    CHECK_THROWS_AS(square_root_degree(0), std::invalid_argument);
    CHECK_THROWS_AS(square_root_degree(-4), std::invalid_argument);
}

TEST_CASE("lambda candidates") {
    // g=3: 4 | (l - lambda)
    CHECK(lambda_candidates(3, 4, 6) == std::vector<Int>{2, -2});
    CHECK(lambda_candidates(3, 4, 8) == std::vector<Int>{});
    // g=2: 2 | (l - lambda), so parity of l and lambda must agree
    CHECK(lambda_candidates(2, 4, 6) == std::vector<Int>{2, -2});
    CHECK(lambda_candidates(2, 4, 7) == std::vector<Int>{});
    CHECK(lambda_candidates(2, 9, 5) == std::vector<Int>{3, -3});
    // g=4: 6 | (l - lambda); l=9, lambda=3 works, lambda=-3 works too
    CHECK(lambda_candidates(4, 9, 9) == std::vector<Int>{3, -3});
    CHECK(lambda_candidates(4, 9, 5) == std::vector<Int>{});
    // one-sided case: g=5, l=11, only lambda=3 (11-3=8 divisible, 11+3=14 not)
    CHECK(lambda_candidates(5, 9, 11) == std::vector<Int>{3});
    CHECK_THROWS_AS(lambda_candidates(3, 5, 6), std::invalid_argument);
}

TEST_CASE("required sum of squares") {
    CHECK(required_sum_sq(3, 4, 6) == 8);
    CHECK(required_sum_sq(2, 9, 5) == 8);
    CHECK(required_sum_sq(5, 9, 11) == 14);
    CHECK(required_sum_sq(2, 4, 2) == 0);
    CHECK_FALSE(required_sum_sq(3, 4, 7).has_value()); // 45/4 not integral
    CHECK_FALSE(required_sum_sq(3, 9, 2).has_value()); // negative
}

TEST_CASE("partition enumeration matches the oracle") {
    for (Int n = 1; n <= 60; ++n) {
        std::set<std::vector<Int>> expect = oracle_partitions(n);
        std::set<std::vector<Int>> got;
        for (const BetaPartition& bp : enumerate_beta_partitions(n)) {
            CHECK(std::is_sorted(bp.parts.rbegin(), bp.parts.rend()));
            CHECK(bp.sum_sq() == n);
            CHECK(bp.sum() % 2 == 0);
            CHECK(got.insert(bp.parts).second); // no duplicates
        }
        for (const BetaPartition& bp : enumerate_beta_partitions(n)) got.insert(bp.parts);
        CHECK(got == expect);
    }
}

TEST_CASE("partition order is descending lexicographic") {
    std::vector<BetaPartition> ps = enumerate_beta_partitions(8);
    REQUIRE(ps.size() >= 2);
    CHECK(ps.front().parts == std::vector<Int>{2, 2});
    CHECK(ps.back().parts == std::vector<Int>(8, 1));
    for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1].parts > ps[i].parts);
}

TEST_CASE("partition count cap") {
    std::vector<BetaPartition> all = enumerate_beta_partitions(12);
    std::vector<BetaPartition> capped = enumerate_beta_partitions(12, 3);
    for (const BetaPartition& bp : capped) CHECK(bp.count() <= 3);
    for (const BetaPartition& bp : all)
        if (bp.count() <= 3)
            CHECK(std::find(capped.begin(), capped.end(), bp) != capped.end());
}

TEST_CASE("early stop") {
    int seen = 0;
    for_each_beta_partition(20, {}, [&](const BetaPartition&) { return ++seen < 2; });
    CHECK(seen == 2);
}

TEST_CASE("existence has even parity") {
    for (Int n = 1; n <= 200; ++n) {
        CHECK(beta_partition_exists(n) == (n >= 2 && n % 2 == 0));
        CHECK(beta_partition_exists(n) == !enumerate_beta_partitions(n).empty());
    }
    CHECK_THROWS_AS(beta_partition_exists(0), std::invalid_argument);
}

TEST_CASE("bound values") {
    // g=2, betas (2,2,2,2): 1 + (4 + 4*8)/24 = 5/2
    CHECK(amerik_bound(2, {{2, 2, 2, 2}}) == Rational(5, 2));
    // g=3, betas (2,2): 1 + (2 + 8*4)/24 = 1 + 34/24 = 29/12
    CHECK(amerik_bound(3, {{2, 2}}) == Rational(29, 12));
    // g=2, betas 1^12: 1 + (12 + 48)/24 = 7/2
    CHECK(amerik_bound(2, {std::vector<Int>(12, 1)}) == Rational(7, 2));
}

TEST_CASE("bound-based admission") {
    // g=2, deg=4, N=8: need p + 4 sum >= 72; 1^8 gives 8 + 32 = 40, fails;
    // no partition of 8 reaches 72, since p + 4 sum <= 8 + 4*8 = 40 < 72...
    CHECK_FALSE(amerik_admits(2, 4, 8, false).has_value());
    // g=2, deg=4, N=30: 1^30 gives 30 + 120 = 150 >= 72
    std::optional<BetaPartition> w = amerik_admits(2, 4, 30, false);
    REQUIRE(w.has_value());
    CHECK(w->sum_sq() == 30);
    // g=5, deg=4, N=4: partitions {(2), (1,1,1,1)} score 37 and 68 < 72
    CHECK_FALSE(amerik_admits(5, 4, 4, false).has_value());
    // width cap changes the answer: g=2, deg=2, N=26 admits 1^26 without the
    // cap (score 130 >= 24) but the cap 8(deg-1)=8 forbids p=26; capped
    // partitions of 26 top out below p=9
    CHECK(amerik_admits(2, 2, 26, false).has_value());
    std::optional<BetaPartition> capped = amerik_admits(2, 2, 26, true);
    if (capped) CHECK(capped->count() <= 8);
}
