#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dyckdiv {

/// Letter of the pairing alphabet. The k-th letter of the central image of a
/// word w of even length n is the pair (w_k, w_{n+1-k}), read outside-in.
enum class PairLetter : std::uint8_t { aa, ab, ba, bb };

using CentralImage = std::vector<PairLetter>;

char mirror_letter(char c);                   // a <-> b
std::string mirror_word(std::string_view w);  // letterwise swap

/// Balanced word: every prefix has #a >= #b and the totals agree.
bool is_dyck(std::string_view w);

/// Dyck word equal to the mirror of its own reversal.
bool is_symmetric_dyck(std::string_view w);

/// Maximum prefix height of the path (+1 per a, -1 per b).
std::size_t height(std::string_view w);

/// Unique split at the interior returns to height zero. Every factor starts
/// with a, ends with b and never touches zero in between.
std::vector<std::string> irreducible_factorization(std::string_view w);

/// Number of irreducible factors; additive under plain concatenation.
std::size_t irreducible_factor_count(std::string_view w);

/// Outside-in pairing of an even-length word; a bijection onto pair strings.
CentralImage central_image(std::string_view w);
std::string from_central_image(const CentralImage& pairs);

/// Monoid product transported through the pairing: pair strings concatenate.
std::string central_concat(std::string_view u, std::string_view v);

/// Occurrences of one pair letter in the central image; additive under
/// central_concat.
std::size_t pair_count(PairLetter x, std::string_view w);

/// Matched (a,b) pairs sitting symmetrically about the midpoint,
/// i.e. matched positions (i, j) with i + j = |w| + 1.
std::size_t centered_tunnels(std::string_view w);

/// Unique factorization in the central-concatenation monoid. Computed by a
/// backward viability pass over the central image: the generator images do
/// not form a prefix code, so plain greedy-shortest would mis-split.
std::vector<std::string> central_factorization(std::string_view w);

/// Centered tunnels recomputed as the number of "ab" factors in the
/// central factorization; must agree with centered_tunnels.
std::size_t centered_tunnels_via_factorization(std::string_view w);

/// All symmetric Dyck words of length <= max_len, shortest first, then by
/// the order of their free first halves.
std::vector<std::string> enumerate_symmetric_dyck(std::size_t max_len);

PairLetter pair_letter(char first, char second);
std::string_view pair_letter_str(PairLetter x);
std::string central_image_str(const CentralImage& pairs);  // "ab,ba,ab"

}  // namespace dyckdiv
