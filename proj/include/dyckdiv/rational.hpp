#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dyckdiv {

/// Positive rational kept in lowest terms. Comparisons cross-multiply in
/// 128-bit integers; no decision here ever touches floating point.
class Rational {
public:
    Rational(std::uint64_t num, std::uint64_t den);

    /// Accepts "P/Q" or the integer shorthand "P".
    static Rational parse(std::string_view text);

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    /// "P" when integral, otherwise "P/Q".
    std::string str() const;

    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);
    friend bool operator==(const Rational& x, const Rational& y) = default;

private:
    std::uint64_t num_;
    std::uint64_t den_;
};

/// Scale factor for the divisor encoding; must exceed 1.
Rational make_lambda(std::uint64_t num, std::uint64_t den);
Rational parse_lambda(std::string_view text);

/// Throws std::domain_error unless lambda > 1.
void require_lambda(const Rational& lambda);

/// Exact test for sqrt(n/lambda) < d <= sqrt(lambda*n): open on the left,
/// closed on the right, decided by integer cross-multiplication only.
bool in_sqrt_window(std::uint64_t d, std::uint64_t n, const Rational& lambda);

/// Exact test for d < sqrt(lambda*n).
bool below_sqrt_upper(std::uint64_t d, std::uint64_t n, const Rational& lambda);

/// a*b, throwing std::overflow_error instead of wrapping.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace dyckdiv
