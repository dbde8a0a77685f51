#include "dyckdiv/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace dyckdiv {

namespace {

using u128 = unsigned __int128;

u128 checked_mul_u128(u128 a, u128 b) {
    if (a != 0 && b > ~u128{0} / a)
        throw std::overflow_error("arithmetic overflow in 128-bit product");
    return a * b;
}

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last)
        throw std::invalid_argument("expected a positive integer, got '" + std::string(text) + "'");
    return value;
}

}  // namespace

Rational::Rational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("invalid denominator: 0");
    if (num_ == 0) throw std::invalid_argument("rational must be positive");
    const std::uint64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_u64(text), 1);
    return Rational(parse_u64(text.substr(0, slash)), parse_u64(text.substr(slash + 1)));
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return u128{x.num_} * y.den_ <=> u128{y.num_} * x.den_;
}

Rational make_lambda(std::uint64_t num, std::uint64_t den) {
    Rational r(num, den);
    require_lambda(r);
    return r;
}

Rational parse_lambda(std::string_view text) {
    Rational r = Rational::parse(text);
    require_lambda(r);
    return r;
}

void require_lambda(const Rational& lambda) {
    if (lambda.num() <= lambda.den())
        throw std::domain_error("lambda out of range: " + lambda.str() + " <= 1");
}

bool in_sqrt_window(std::uint64_t d, std::uint64_t n, const Rational& lambda) {
    if (d == 0 || n == 0) throw std::invalid_argument("d and n must be positive");
    const u128 d2 = u128{d} * d;
    // n/lambda < d^2 and d^2 <= lambda*n, cross-multiplied by den/num.
    const bool above = u128{n} * lambda.den() < checked_mul_u128(d2, lambda.num());
    const bool below = checked_mul_u128(d2, lambda.den()) <= u128{lambda.num()} * n;
    return above && below;
}

bool below_sqrt_upper(std::uint64_t d, std::uint64_t n, const Rational& lambda) {
    if (d == 0 || n == 0) throw std::invalid_argument("d and n must be positive");
    const u128 d2 = u128{d} * d;
    return checked_mul_u128(d2, lambda.den()) < u128{lambda.num()} * n;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    const u128 p = u128{a} * b;
    if (p > u128{~std::uint64_t{0}})
        throw std::overflow_error("arithmetic overflow in 64-bit product");
    return static_cast<std::uint64_t>(p);
}

}  // namespace dyckdiv
