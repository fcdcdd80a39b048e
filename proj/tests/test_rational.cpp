#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "orbispec/rational.hpp"
#include "oracles.hpp"

using orbispec::min_denominator_rational;
using orbispec::RationalRatio;

TEST_CASE("singleton interval at an integer", "[rational]") {
    CHECK(min_denominator_rational(1.0, 1.0) == RationalRatio{1, 1});
}

TEST_CASE("perfect fifth window finds 3/2", "[rational]") {
    const double lo = std::exp2(680.0 / 1200.0);
    const double hi = std::exp2(720.0 / 1200.0);
    CHECK(min_denominator_rational(lo, hi) == RationalRatio{3, 2});
    const auto brute = oracle::brute_min_denominator(lo, hi, 100);
    REQUIRE(brute.has_value());
    CHECK(brute->first == 3);
    CHECK(brute->second == 2);
}

TEST_CASE("tritone window finds 7/5", "[rational]") {
    const double lo = std::exp2(580.0 / 1200.0);
    const double hi = std::exp2(620.0 / 1200.0);
    CHECK(min_denominator_rational(lo, hi) == RationalRatio{7, 5});
    const auto brute = oracle::brute_min_denominator(lo, hi, 100);
    REQUIRE(brute.has_value());
    CHECK(brute->second == 5);
}

TEST_CASE("empty interval is rejected", "[rational]") {
    CHECK_THROWS_AS(min_denominator_rational(1.5, 1.2), orbispec::EmptyIntervalError);
    CHECK_THROWS_AS(min_denominator_rational(-1.0, 2.0), orbispec::EmptyIntervalError);
}

TEST_CASE("denominator guard trips on degenerate intervals", "[rational]") {
    CHECK_THROWS_AS(min_denominator_rational(0.5 + 1e-12, 0.5 + 2e-12, 1000),
                    orbispec::GuardExceededError);
}

TEST_CASE("agrees with brute force on random intervals", "[rational]") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> lo_dist(0.5, 2.0);
    std::uniform_real_distribution<double> ratio_dist(1.01, 1.1);
    for (int trial = 0; trial < 10000; ++trial) {
        const double lo = lo_dist(rng);
        const double hi = lo * ratio_dist(rng);
        const RationalRatio r = min_denominator_rational(lo, hi);
        const auto brute = oracle::brute_min_denominator(lo, hi, 1000);
        REQUIRE(brute.has_value());
        REQUIRE(r.num == brute->first);
        REQUIRE(r.den == brute->second);
    }
}

TEST_CASE("result is reduced and inside the interval", "[rational]") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> lo_dist(1.0, 3.0);
    std::uniform_real_distribution<double> w_dist(0.002, 0.3);
    for (int trial = 0; trial < 2000; ++trial) {
        const double lo = lo_dist(rng);
        const double hi = lo + w_dist(rng);
        const RationalRatio r = min_denominator_rational(lo, hi);
        const double v = static_cast<double>(r.num) / static_cast<double>(r.den);
        REQUIRE(std::gcd(r.num, r.den) == 1);
        REQUIRE(v >= lo);
        REQUIRE(v <= hi);
        REQUIRE(r.num >= r.den);
    }
}
