#include "dyckdiv/encoder.hpp"

#include "dyckdiv/dyck.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyckdiv {

namespace {
using u128 = unsigned __int128;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    std::vector<std::uint64_t> divs;
    for (std::uint64_t i = 1; i <= n / i; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            if (i != n / i) divs.push_back(n / i);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool in_scaled_divisors(std::uint64_t d, std::uint64_t n, const Rational& lambda) {
    const u128 qd = u128{lambda.den()} * d;
    if (qd % lambda.num() != 0) return false;
    const u128 src = qd / lambda.num();
    return src >= 1 && src <= n && n % static_cast<std::uint64_t>(src) == 0;
}

bool scaled_hits_divisor(std::uint64_t d, std::uint64_t n, const Rational& lambda) {
    // lambda*d = p*d/q is integral iff q | d, p and q being coprime.
    if (d % lambda.den() != 0) return false;
    const u128 v = u128{d / lambda.den()} * lambda.num();
    return v <= n && n % static_cast<std::uint64_t>(v) == 0;
}

CutSequence cut_sequence(std::uint64_t n, const Rational& lambda) {
    require_lambda(lambda);
    const auto divs = divisors(n);

    std::vector<std::uint64_t> plain;   // d kept on the divisor side
    std::vector<std::uint64_t> scaled;  // d whose lambda*d is kept
    for (std::uint64_t d : divs) {
        if (!in_scaled_divisors(d, n, lambda)) plain.push_back(d);
        if (!scaled_hits_divisor(d, n, lambda)) scaled.push_back(d);
    }

    CutSequence cuts;
    cuts.reserve(plain.size() + scaled.size());
    const std::uint64_t p = lambda.num();
    const std::uint64_t q = lambda.den();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < plain.size() || j < scaled.size()) {
        bool take_plain;
        if (i == plain.size()) {
            take_plain = false;
        } else if (j == scaled.size()) {
            take_plain = true;
        } else {
            // plain[i] vs (p/q)*scaled[j], cross-multiplied
            const u128 lhs = u128{plain[i]} * q;
            const u128 rhs = u128{p} * scaled[j];
            if (lhs == rhs)
                throw std::logic_error("cut values collide after removing shared elements");
            take_plain = lhs < rhs;
        }
        if (take_plain) {
            cuts.push_back({Rational(plain[i], 1), 'a', plain[i]});
            ++i;
        } else {
            cuts.push_back({Rational(checked_mul(p, scaled[j]), q), 'b', scaled[j]});
            ++j;
        }
    }
    if (cuts.size() % 2 != 0) throw std::logic_error("cut sequence has odd length");
    return cuts;
}

std::string encode(std::uint64_t n, const Rational& lambda) {
    const auto cuts = cut_sequence(n, lambda);
    std::string w;
    w.reserve(cuts.size());
    for (const auto& c : cuts) w.push_back(c.letter);
    if (w.empty() || !is_symmetric_dyck(w))
        throw std::logic_error("encoding of n=" + std::to_string(n) + ", lambda=" +
                               lambda.str() + " is not a symmetric Dyck word: '" + w + "'");
    return w;
}

std::vector<std::uint64_t> preimages(std::string_view w, const Rational& lambda,
                                     std::uint64_t n_max) {
    if (n_max == 0) throw std::invalid_argument("n_max must be positive");
    std::vector<std::uint64_t> hits;
    for (std::uint64_t n = 1; n <= n_max; ++n)
        if (encode(n, lambda) == w) hits.push_back(n);
    return hits;
}

}  // namespace dyckdiv
