#pragma once

#include "dyckdiv/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dyckdiv {

/// One cut of the encoding: a value that belongs to exactly one of the two
/// sets {divisors of n} and {lambda * divisors of n}.
struct CutEntry {
    Rational value;         // d for letter 'a', lambda*d for letter 'b'
    char letter;            // 'a' plain-divisor side, 'b' scaled side
    std::uint64_t divisor;  // the divisor the value came from
};

using CutSequence = std::vector<CutEntry>;

/// All divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// True iff d equals lambda*d' for some divisor d' of n. With lambda = p/q in
/// lowest terms: q*d must be divisible by p and (q*d)/p must divide n.
bool in_scaled_divisors(std::uint64_t d, std::uint64_t n, const Rational& lambda);

/// True iff lambda*d is itself an integer divisor of n.
bool scaled_hits_divisor(std::uint64_t d, std::uint64_t n, const Rational& lambda);

/// The tagged, strictly increasing merge of the two one-sided sets. Values
/// present on both sides are dropped from both; ties are impossible after
/// that and raise std::logic_error if ever observed.
CutSequence cut_sequence(std::uint64_t n, const Rational& lambda);

/// The word of the cut sequence ('a'/'b' per entry). The result is validated
/// to be a nonempty symmetric Dyck word; a violation is an internal bug and
/// throws std::logic_error.
std::string encode(std::uint64_t n, const Rational& lambda);

/// All n <= n_max whose encoding equals w, by exhaustive scan. Distinct n may
/// share a word; nothing here assumes injectivity.
std::vector<std::uint64_t> preimages(std::string_view w, const Rational& lambda,
                                     std::uint64_t n_max);

}  // namespace dyckdiv
