#include "dyckdiv/rational.hpp"

#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace dyckdiv;

TEST_CASE("make_lambda normalizes and rejects values at or below 1") {
    CHECK(make_lambda(2, 1) == Rational(2, 1));
    CHECK(make_lambda(6, 4) == Rational(3, 2));
    CHECK(make_lambda(6, 4).num() == 3);
    CHECK(make_lambda(6, 4).den() == 2);
    CHECK_THROWS_AS(make_lambda(1, 1), std::domain_error);
    CHECK_THROWS_AS(make_lambda(3, 3), std::domain_error);
    CHECK_THROWS_AS(make_lambda(2, 3), std::domain_error);
    CHECK_THROWS_AS(make_lambda(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_lambda(0, 5), std::invalid_argument);
}

TEST_CASE("lambda text grammar: P/Q or integer shorthand") {
    CHECK(parse_lambda("2") == Rational(2, 1));
    CHECK(parse_lambda("7/3") == Rational(7, 3));
    CHECK(parse_lambda("6/4") == Rational(3, 2));
    CHECK(parse_lambda("6/4").str() == "3/2");
    CHECK(parse_lambda("2").str() == "2");
    CHECK_THROWS_AS(parse_lambda("1"), std::domain_error);
    CHECK_THROWS_AS(parse_lambda("2/4"), std::domain_error);
    CHECK_THROWS_AS(parse_lambda(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_lambda("3/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lambda("/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lambda("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lambda(" 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lambda("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lambda("-3/2"), std::invalid_argument);
}

TEST_CASE("comparison by cross-multiplication") {
    CHECK(Rational(3, 2) < Rational(2, 1));
    CHECK(Rational(3, 2) == Rational(3, 2));
    CHECK(Rational(9, 2) > Rational(4, 1));
}

TEST_CASE("comparison is antisymmetric, transitive and matches long double") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000);
    for (int trial = 0; trial < 2000; ++trial) {
        const Rational x(dist(rng), dist(rng));
        const Rational y(dist(rng), dist(rng));
        const Rational z(dist(rng), dist(rng));

        CHECK((x < y) == (y > x));
        CHECK((x == y) == (y == x));
        if (x < y && y < z) CHECK(x < z);
        if (x > y && y > z) CHECK(x > z);

        const long double fx = static_cast<long double>(x.num()) / x.den();
        const long double fy = static_cast<long double>(y.num()) / y.den();
        if (std::abs(fx - fy) > 1e-9L) CHECK((x < y) == (fx < fy));
    }
}

TEST_CASE("sqrt window: boundaries are open left, closed right") {
    const Rational two(2, 1);
    const Rational three_halves(3, 2);

    // d^2 equals lambda*n exactly: the right boundary is included.
    CHECK(in_sqrt_window(2, 2, two));
    // d^2*lambda equals n exactly: the left boundary is excluded.
    CHECK_FALSE(in_sqrt_window(1, 2, two));
    CHECK_FALSE(in_sqrt_window(2, 6, three_halves));

    CHECK(in_sqrt_window(2, 6, two));
    CHECK(in_sqrt_window(3, 6, two));
    CHECK_FALSE(in_sqrt_window(1, 6, two));
    CHECK_FALSE(in_sqrt_window(6, 6, two));
    CHECK(in_sqrt_window(3, 6, three_halves));
    CHECK_FALSE(in_sqrt_window(2, 6, three_halves));

    CHECK_THROWS_AS(in_sqrt_window(0, 6, two), std::invalid_argument);
    CHECK_THROWS_AS(in_sqrt_window(6, 0, two), std::invalid_argument);
}

TEST_CASE("sqrt window agrees with high-precision floating evaluation off-boundary") {
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<std::uint64_t> nd(1, 100000);
    std::uniform_int_distribution<std::uint64_t> pq(1, 40);
    int checked = 0;
    for (int trial = 0; trial < 5000; ++trial) {
        const std::uint64_t n = nd(rng);
        const std::uint64_t p = pq(rng);
        const std::uint64_t q = pq(rng);
        if (p <= q) continue;
        const Rational lambda(p, q);
        std::uniform_int_distribution<std::uint64_t> dd(1, n);
        const std::uint64_t d = dd(rng);

        using u128 = unsigned __int128;
        const u128 d2 = u128{d} * d;
        const bool right_boundary = d2 * lambda.den() == u128{lambda.num()} * n;
        const bool left_boundary = d2 * lambda.num() == u128{n} * lambda.den();
        if (right_boundary || left_boundary) continue;  // integer kernel is authoritative

        const long double lam = static_cast<long double>(lambda.num()) / lambda.den();
        const bool approx = std::sqrt(static_cast<long double>(n) / lam) < d &&
                            static_cast<long double>(d) <= std::sqrt(lam * n);
        CHECK(in_sqrt_window(d, n, lambda) == approx);
        ++checked;
    }
    CHECK(checked > 1000);
}

TEST_CASE("intermediates overflow loudly instead of wrapping") {
    const std::uint64_t big = std::uint64_t{1} << 62;
    const Rational huge(std::uint64_t{1} << 63, 1);
    CHECK_THROWS_AS(in_sqrt_window(big, big, huge), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(std::uint64_t{1} << 40, std::uint64_t{1} << 40),
                    std::overflow_error);
    CHECK(checked_mul(std::uint64_t{1} << 31, std::uint64_t{1} << 31) ==
          std::uint64_t{1} << 62);
}
