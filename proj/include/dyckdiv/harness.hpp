#pragma once

#include "dyckdiv/rational.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dyckdiv {

/// Membership-testable word languages. Each kind is decidable in linear time;
/// a spec may intersect two kinds.
enum class LangKind {
    SingletonAb,      // exactly "ab"
    AbStar,           // "ab" repeated zero or more times
    AKBK,             // a^k b^k, k >= 1
    IrreducibleDyck,  // Dyck, nonempty, no interior return to zero
    CtPositive,       // Dyck with at least one centered tunnel
    OmegaOdd,         // Dyck with an odd number of irreducible factors
    SymmetricDyck,
};

struct LanguageSpec {
    LangKind first;
    std::optional<LangKind> second;  // intersection of at most two kinds

    LanguageSpec(LangKind k) : first(k) {}
    LanguageSpec(LangKind k1, LangKind k2) : first(k1), second(k2) {}
    std::string name() const;
};

bool lang_member(const LanguageSpec& spec, std::string_view w);

/// Arithmetic predicates paired with languages in the characterization
/// checks. Names match the CLI --pred values.
enum class PredicateId {
    MiddlePositive,
    BlocksOdd,
    PowerOfTwo,
    NotTrapezoidal,
    NotPyth,
    DenselyDivisible,
};

PredicateId predicate_from_name(std::string_view name);
std::string_view predicate_name(PredicateId id);

/// The language each predicate is checked against.
LanguageSpec characterization_language(PredicateId id);

/// n = 0 marks a word-level counterexample (language equality checks).
struct Counterexample {
    std::uint64_t n = 0;
    std::string expected;
    std::string actual;
    std::string word;

    bool operator==(const Counterexample&) const = default;
};

struct VerificationReport {
    std::string theorem_id;
    std::optional<Rational> lambda;  // absent for lambda-free checks
    std::uint64_t n_lo = 0;
    std::uint64_t n_hi = 0;
    std::uint64_t checked = 0;
    std::vector<Counterexample> counterexamples;
    std::chrono::milliseconds elapsed{0};

    bool pass() const { return counterexamples.empty(); }
};

struct SweepOptions {
    int jobs = 1;                         // 1 = serial reference path
    std::size_t max_counterexamples = 10;
    bool progress = false;                // chunk progress on stderr
};

/// For every n in range, with w the encoding of n: w is a symmetric Dyck
/// word; centered tunnels equal the middle-divisor count; irreducible
/// factors equal the block count; path height equals the largest divisor
/// chain in a lambda-window; ab-pairs equal the low-half divisor count.
VerificationReport check_lemma_suite(const Rational& lambda, std::uint64_t n_lo,
                                     std::uint64_t n_hi, const SweepOptions& opts = {});

/// middle > 0 <=> blocks odd, via the divisor oracles and independently via
/// the word statistics, with the two routes compared pointwise.
VerificationReport verify_hoft(const Rational& lambda, std::uint64_t n_lo,
                               std::uint64_t n_hi, const SweepOptions& opts = {});

/// power of two <=> neither even-trapezoidal nor a Pythagorean semi-perimeter.
VerificationReport verify_pow2_trapezoid(std::uint64_t n_lo, std::uint64_t n_hi,
                                         const SweepOptions& opts = {});

/// power of two <=> 2-densely divisible and not a Pythagorean semi-perimeter.
VerificationReport verify_pow2_dense(std::uint64_t n_lo, std::uint64_t n_hi,
                                     const SweepOptions& opts = {});

/// pred(n) <=> encoding of n lies in the language, for all n <= n_max.
VerificationReport check_characterization(PredicateId pred, const LanguageSpec& spec,
                                          const Rational& lambda, std::uint64_t n_max,
                                          const SweepOptions& opts = {});

/// Membership agreement of two languages over every Dyck word (symmetric
/// only, when flagged) up to max_len. Counterexamples carry the word and
/// n = 0. max_len is capped at 24.
VerificationReport check_language_equality(const LanguageSpec& spec_a,
                                           const LanguageSpec& spec_b,
                                           std::size_t max_len, bool symmetric_only,
                                           const SweepOptions& opts = {});

/// All Dyck words of length <= max_len, shortest first, then lexicographic.
std::vector<std::string> enumerate_dyck(std::size_t max_len);

}  // namespace dyckdiv
