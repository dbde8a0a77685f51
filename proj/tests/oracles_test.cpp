#include "dyckdiv/oracles.hpp"

#include "dyckdiv/encoder.hpp"

#include "doctest.h"

#include <random>

using namespace dyckdiv;

namespace {

// Definition-direct window scan: for every anchor divisor, count divisors in
// [d1, lambda*d1) by a fresh double loop.
std::size_t max_chain_naive(std::uint64_t n, const Rational& lambda) {
    using u128 = unsigned __int128;
    const auto divs = divisors(n);
    std::size_t best = 0;
    for (const auto d1 : divs) {
        std::size_t count = 0;
        for (const auto d : divs)
            if (d >= d1 && u128{d} * lambda.den() < u128{lambda.num()} * d1) ++count;
        best = std::max(best, count);
    }
    return best;
}

// Interval sweep over [d, lambda*d] with rational endpoints, merging as long
// as the next left end does not exceed the running right end.
std::size_t blocks_naive(std::uint64_t n, const Rational& lambda) {
    const auto divs = divisors(n);
    std::size_t blocks = 0;
    Rational right(1, 1);
    bool open = false;
    for (const auto d : divs) {
        const Rational left(d, 1);
        const Rational end(checked_mul(lambda.num(), d), lambda.den());
        if (!open || right < left) {
            ++blocks;
            open = true;
            right = end;
        } else if (right < end) {
            right = end;
        }
    }
    return blocks;
}

// Literal scan over sums of consecutive runs of even length.
bool even_trapezoidal_naive(std::uint64_t n) {
    for (std::uint64_t len = 2;; len += 2) {
        const std::uint64_t base = len * (len + 1) / 2;  // 1 + 2 + ... + len
        if (base > n) return false;
        for (std::uint64_t a = 1;; ++a) {
            const std::uint64_t sum = len * a + len * (len - 1) / 2;
            if (sum == n) return true;
            if (sum > n) break;
        }
    }
}

}  // namespace

TEST_CASE("middle divisor counts") {
    CHECK(middle_count(6, Rational(2, 1)) == 2);
    CHECK(middle_count(5, Rational(2, 1)) == 0);
    CHECK(middle_count(6, Rational(3, 2)) == 1);
    CHECK(middle_count(1, Rational(2, 1)) == 1);
}

TEST_CASE("block counts match an interval-sweep oracle") {
    CHECK(blocks_count(6, Rational(2, 1)) == 1);
    CHECK(blocks_count(5, Rational(2, 1)) == 2);
    CHECK(blocks_count(6, Rational(3, 2)) == 3);

    const std::vector<Rational> lambdas{Rational(3, 2), Rational(2, 1), Rational(7, 3)};
    for (std::uint64_t n = 1; n <= 2000; ++n)
        for (const auto& lambda : lambdas)
            CHECK(blocks_count(n, lambda) == blocks_naive(n, lambda));
}

TEST_CASE("densely divisible means a single block") {
    CHECK(is_densely_divisible(6, Rational(2, 1)));
    CHECK_FALSE(is_densely_divisible(5, Rational(2, 1)));
    CHECK(is_densely_divisible(1, Rational(2, 1)));

    for (std::uint64_t n = 1; n <= 500; ++n) {
        CHECK(is_densely_divisible(n, Rational(3, 2)) ==
              (blocks_count(n, Rational(3, 2)) == 1));
        CHECK(blocks_count(n, Rational(3, 2)) <= divisors(n).size());
    }
}

TEST_CASE("max chain: regenerated window-scan values and oracle agreement") {
    // Values regenerated by the brute-force window scan.
    CHECK(max_chain_naive(2, Rational(2, 1)) == 1);
    CHECK(max_chain_naive(6, Rational(2, 1)) == 2);
    CHECK(max_chain_naive(12, Rational(2, 1)) == 2);
    CHECK(max_chain(2, Rational(2, 1)) == 1);
    CHECK(max_chain(6, Rational(2, 1)) == 2);
    CHECK(max_chain(12, Rational(2, 1)) == 2);
    CHECK(max_chain(6, Rational(3, 2)) == 1);
    CHECK(max_chain(15, Rational(2, 1)) == 2);

    const std::vector<Rational> lambdas{Rational(3, 2), Rational(2, 1), Rational(5, 2),
                                        Rational(7, 3)};
    for (std::uint64_t n = 1; n <= 2000; ++n)
        for (const auto& lambda : lambdas)
            CHECK(max_chain(n, lambda) == max_chain_naive(n, lambda));
}

TEST_CASE("even-trapezoidal: examples, run-sum oracle, divisor-count formula") {
    CHECK(is_even_trapezoidal(3));        // 1 + 2
    CHECK_FALSE(is_even_trapezoidal(6));
    CHECK_FALSE(is_even_trapezoidal(8));
    CHECK(even_trapezoidal_divisor_count(3) == 1);
    CHECK(even_trapezoidal_divisor_count(6) == 0);
    CHECK(even_trapezoidal_divisor_count(1) == 0);

    for (std::uint64_t n = 1; n <= 1000; ++n)
        CHECK(is_even_trapezoidal(n) == even_trapezoidal_naive(n));
    for (std::uint64_t n = 1; n <= 2000; ++n)
        CHECK(is_even_trapezoidal(n) == (even_trapezoidal_divisor_count(n) > 0));
}

TEST_CASE("pythagorean semi-perimeters: brute force, sieve, close divisor pairs") {
    CHECK(is_pythagorean_semiperimeter(6));       // (3,4,5)
    CHECK_FALSE(is_pythagorean_semiperimeter(8));
    CHECK(is_pythagorean_semiperimeter(15));      // (5,12,13)

    CHECK(has_close_divisor_pair(6));
    CHECK_FALSE(has_close_divisor_pair(8));
    CHECK(has_close_divisor_pair(15));

    const auto sieve = pythagorean_semiperimeter_sieve(800);
    for (std::uint64_t n = 1; n <= 800; ++n) {
        CHECK(is_pythagorean_semiperimeter(n) == sieve[n]);
        CHECK(is_pythagorean_semiperimeter(n) == has_close_divisor_pair(n));
    }
}

TEST_CASE("power of two counts odd divisors") {
    CHECK(is_power_of_two(1));
    CHECK(is_power_of_two(16));
    CHECK_FALSE(is_power_of_two(12));

    for (std::uint64_t n = 1; n <= 10000; ++n) {
        std::size_t odd = 0;
        for (const auto d : divisors(n))
            if (d % 2 == 1) ++odd;
        CHECK(is_power_of_two(n) == (odd == 1));
    }
}

TEST_CASE("single block forces adjacent divisors within the window") {
    using u128 = unsigned __int128;
    const std::vector<Rational> lambdas{Rational(3, 2), Rational(2, 1), Rational(3, 1)};
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        for (const auto& lambda : lambdas) {
            if (blocks_count(n, lambda) != 1) continue;
            const auto divs = divisors(n);
            for (std::size_t i = 0; i + 1 < divs.size(); ++i)
                CHECK(u128{divs[i + 1]} * lambda.den() <= u128{lambda.num()} * divs[i]);
        }
    }
}

TEST_CASE("powers of two are neither trapezoidal nor pythagorean") {
    for (std::uint64_t n = 1; n <= 4096; n *= 2) {
        CHECK_FALSE(is_even_trapezoidal(n));
        CHECK_FALSE(is_pythagorean_semiperimeter(n));
    }
}

TEST_CASE("low-half divisor count: hand values") {
    CHECK(low_half_divisor_count(15, Rational(2, 1)) == 3);  // divisors 1, 3, 5
    CHECK(low_half_divisor_count(6, Rational(2, 1)) == 2);   // divisors 1, 3
    CHECK(low_half_divisor_count(6, Rational(3, 2)) == 2);   // divisors 1, 2
    CHECK(low_half_divisor_count(1, Rational(2, 1)) == 1);
}

TEST_CASE("profile aggregates the oracles") {
    const auto p = profile(6, Rational(2, 1));
    CHECK(p.n == 6);
    CHECK(p.middle_count == 2);
    CHECK(p.blocks_count == 1);
    CHECK(p.densely_divisible);
    CHECK_FALSE(p.even_trapezoidal);
    CHECK(p.pythagorean_semiperimeter);
    CHECK_FALSE(p.power_of_two);
    CHECK(p.max_chain == 2);
}
