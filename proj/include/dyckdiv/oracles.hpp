#pragma once

#include "dyckdiv/rational.hpp"

#include <cstdint>
#include <vector>

namespace dyckdiv {

// Word-free arithmetic predicates, each implemented straight from its
// definition so verification sweeps have independent ground truth.

/// Divisors d of n with sqrt(n/lambda) < d <= sqrt(lambda*n).
std::size_t middle_count(std::uint64_t n, const Rational& lambda);

/// Connected components of the union of closed intervals [d, lambda*d] over
/// divisors d. Touching endpoints connect; a new block starts exactly when
/// lambda*d_i < d_{i+1}.
std::size_t blocks_count(std::uint64_t n, const Rational& lambda);

bool is_densely_divisible(std::uint64_t n, const Rational& lambda);

/// Largest h such that h divisors fit in a half-open window
/// [d_1, lambda*d_1) anchored at a divisor d_1.
std::size_t max_chain(std::uint64_t n, const Rational& lambda);

/// n is a sum of an even number of consecutive positive integers,
/// i.e. n = m*(2a + 2m - 1) for some a >= 1, m >= 1.
bool is_even_trapezoidal(std::uint64_t n);

/// Divisors d of n with d > sqrt(2n) that are not twice a divisor; this
/// count equals the number of even-length consecutive-part partitions.
std::size_t even_trapezoidal_divisor_count(std::uint64_t n);

/// Exhaustive triple search: x^2 + y^2 = z^2 with x + y + z = 2n.
bool is_pythagorean_semiperimeter(std::uint64_t n);

/// Bitmap of semi-perimeters up to n_max, filled by enumerating all
/// Pythagorean triples k*(m^2-r^2, 2mr, m^2+r^2); the semi-perimeter of that
/// triple is k*m*(m+r). Used by the large sweeps where the per-n triple
/// search would be quadratic.
std::vector<bool> pythagorean_semiperimeter_sieve(std::uint64_t n_max);

/// Two consecutive divisors with d_i < d_{i+1} < 2*d_i.
bool has_close_divisor_pair(std::uint64_t n);

/// Exactly one odd divisor.
bool is_power_of_two(std::uint64_t n);

/// Divisors d of n with d not of the form lambda*d' (d' | n) and
/// d < sqrt(lambda*n).
std::size_t low_half_divisor_count(std::uint64_t n, const Rational& lambda);

struct IntegerProfile {
    std::uint64_t n;
    std::size_t middle_count;
    std::size_t blocks_count;
    bool densely_divisible;
    bool even_trapezoidal;
    bool pythagorean_semiperimeter;
    bool power_of_two;
    std::size_t max_chain;
};

IntegerProfile profile(std::uint64_t n, const Rational& lambda);

}  // namespace dyckdiv
