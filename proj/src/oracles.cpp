#include "dyckdiv/oracles.hpp"

#include "dyckdiv/encoder.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyckdiv {

namespace {
using u128 = unsigned __int128;
}

std::size_t middle_count(std::uint64_t n, const Rational& lambda) {
    require_lambda(lambda);
    std::size_t count = 0;
    for (std::uint64_t d : divisors(n))
        if (in_sqrt_window(d, n, lambda)) ++count;
    return count;
}

std::size_t blocks_count(std::uint64_t n, const Rational& lambda) {
    require_lambda(lambda);
    const auto divs = divisors(n);
    std::size_t blocks = 1;
    for (std::size_t i = 0; i + 1 < divs.size(); ++i)
        if (u128{lambda.num()} * divs[i] < u128{lambda.den()} * divs[i + 1]) ++blocks;
    return blocks;
}

bool is_densely_divisible(std::uint64_t n, const Rational& lambda) {
    return blocks_count(n, lambda) == 1;
}

std::size_t max_chain(std::uint64_t n, const Rational& lambda) {
    require_lambda(lambda);
    const auto divs = divisors(n);
    std::size_t best = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < divs.size(); ++i) {
        if (j < i) j = i;
        while (j < divs.size() &&
               u128{divs[j]} * lambda.den() < u128{lambda.num()} * divs[i])
            ++j;
        best = std::max(best, j - i);
    }
    return best;
}

bool is_even_trapezoidal(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    // n = m*(2a + 2m - 1): the cofactor q = n/m must be odd and >= 2m + 1.
    for (std::uint64_t m = 1; u128{m} * (2 * m + 1) <= n; ++m) {
        if (n % m != 0) continue;
        const std::uint64_t q = n / m;
        if (q % 2 == 1 && q >= 2 * m + 1) return true;
    }
    return false;
}

std::size_t even_trapezoidal_divisor_count(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    std::size_t count = 0;
    for (std::uint64_t d : divisors(n)) {
        if (u128{d} * d <= u128{2} * n) continue;
        const bool twice_a_divisor = d % 2 == 0 && n % (d / 2) == 0;
        if (!twice_a_divisor) ++count;
    }
    return count;
}

bool is_pythagorean_semiperimeter(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    const std::uint64_t perimeter = 2 * n;
    // Legs are never equal, so x < y < z throughout.
    for (std::uint64_t x = 1; 3 * x < perimeter; ++x) {
        for (std::uint64_t y = x + 1; x + 2 * y < perimeter; ++y) {
            const std::uint64_t z = perimeter - x - y;
            if (u128{x} * x + u128{y} * y == u128{z} * z) return true;
        }
    }
    return false;
}

std::vector<bool> pythagorean_semiperimeter_sieve(std::uint64_t n_max) {
    std::vector<bool> is_semi(n_max + 1, false);
    for (std::uint64_t m = 2; m * (m + 1) <= n_max; ++m) {
        for (std::uint64_t r = 1; r < m; ++r) {
            const std::uint64_t base = m * (m + r);
            if (base > n_max) break;
            for (std::uint64_t s = base; s <= n_max; s += base) is_semi[s] = true;
        }
    }
    return is_semi;
}

bool has_close_divisor_pair(std::uint64_t n) {
    const auto divs = divisors(n);
    for (std::size_t i = 0; i + 1 < divs.size(); ++i)
        if (u128{divs[i + 1]} < u128{2} * divs[i]) return true;
    return false;
}

bool is_power_of_two(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    while (n % 2 == 0) n /= 2;
    return n == 1;  // odd part 1 <=> the only odd divisor is 1
}

std::size_t low_half_divisor_count(std::uint64_t n, const Rational& lambda) {
    require_lambda(lambda);
    std::size_t count = 0;
    for (std::uint64_t d : divisors(n))
        if (!in_scaled_divisors(d, n, lambda) && below_sqrt_upper(d, n, lambda)) ++count;
    return count;
}

IntegerProfile profile(std::uint64_t n, const Rational& lambda) {
    IntegerProfile p{};
    p.n = n;
    p.middle_count = middle_count(n, lambda);
    p.blocks_count = blocks_count(n, lambda);
    p.densely_divisible = p.blocks_count == 1;
    p.even_trapezoidal = is_even_trapezoidal(n);
    p.pythagorean_semiperimeter = is_pythagorean_semiperimeter(n);
    p.power_of_two = is_power_of_two(n);
    p.max_chain = max_chain(n, lambda);
    return p;
}

}  // namespace dyckdiv
