#include "dyckdiv/dyck.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyckdiv {

namespace {

void require_dyck(std::string_view w) {
    if (!is_dyck(w))
        throw std::invalid_argument("not a Dyck word: '" + std::string(w) + "'");
}

void require_even(std::string_view w) {
    if (w.size() % 2 != 0)
        throw std::invalid_argument("word length must be even: '" + std::string(w) + "'");
}

}  // namespace

char mirror_letter(char c) { return c == 'a' ? 'b' : 'a'; }

std::string mirror_word(std::string_view w) {
    std::string out(w);
    for (char& c : out) c = mirror_letter(c);
    return out;
}

bool is_dyck(std::string_view w) {
    std::ptrdiff_t depth = 0;
    for (char c : w) {
        if (c == 'a') {
            ++depth;
        } else if (c == 'b') {
            if (--depth < 0) return false;
        } else {
            return false;
        }
    }
    return depth == 0;
}

bool is_symmetric_dyck(std::string_view w) {
    if (!is_dyck(w)) return false;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (w[n - 1 - i] != mirror_letter(w[i])) return false;
    return true;
}

std::size_t height(std::string_view w) {
    require_dyck(w);
    std::size_t depth = 0;
    std::size_t peak = 0;
    for (char c : w) {
        if (c == 'a') {
            ++depth;
            peak = std::max(peak, depth);
        } else {
            --depth;
        }
    }
    return peak;
}

std::vector<std::string> irreducible_factorization(std::string_view w) {
    require_dyck(w);
    std::vector<std::string> factors;
    std::size_t start = 0;
    std::ptrdiff_t depth = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        depth += w[i] == 'a' ? 1 : -1;
        if (depth == 0) {
            factors.emplace_back(w.substr(start, i + 1 - start));
            start = i + 1;
        }
    }
    return factors;
}

std::size_t irreducible_factor_count(std::string_view w) {
    require_dyck(w);
    std::size_t count = 0;
    std::ptrdiff_t depth = 0;
    for (char c : w) {
        depth += c == 'a' ? 1 : -1;
        if (depth == 0) ++count;
    }
    return count;
}

PairLetter pair_letter(char first, char second) {
    if ((first != 'a' && first != 'b') || (second != 'a' && second != 'b'))
        throw std::invalid_argument("letters must be a or b");
    return static_cast<PairLetter>((first == 'b' ? 2 : 0) | (second == 'b' ? 1 : 0));
}

std::string_view pair_letter_str(PairLetter x) {
    switch (x) {
        case PairLetter::aa: return "aa";
        case PairLetter::ab: return "ab";
        case PairLetter::ba: return "ba";
        case PairLetter::bb: return "bb";
    }
    throw std::logic_error("bad pair letter");
}

std::string central_image_str(const CentralImage& pairs) {
    std::string out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += pair_letter_str(pairs[i]);
    }
    return out;
}

CentralImage central_image(std::string_view w) {
    require_even(w);
    const std::size_t n = w.size();
    CentralImage out;
    out.reserve(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k)
        out.push_back(pair_letter(w[k], w[n - 1 - k]));
    return out;
}

std::string from_central_image(const CentralImage& pairs) {
    const std::size_t n = 2 * pairs.size();
    std::string w(n, '?');
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto p = pair_letter_str(pairs[k]);
        w[k] = p[0];
        w[n - 1 - k] = p[1];
    }
    return w;
}

std::string central_concat(std::string_view u, std::string_view v) {
    CentralImage pairs = central_image(u);
    const CentralImage tail = central_image(v);
    pairs.insert(pairs.end(), tail.begin(), tail.end());
    return from_central_image(pairs);
}

std::size_t pair_count(PairLetter x, std::string_view w) {
    const CentralImage pairs = central_image(w);
    return static_cast<std::size_t>(std::count(pairs.begin(), pairs.end(), x));
}

std::size_t centered_tunnels(std::string_view w) {
    require_dyck(w);
    std::vector<std::size_t> open;
    std::size_t count = 0;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] == 'a') {
            open.push_back(i);
        } else {
            const std::size_t j = open.back();
            open.pop_back();
            if (j + i == n - 1) ++count;
        }
    }
    return count;
}

std::vector<std::string> central_factorization(std::string_view w) {
    require_dyck(w);
    const CentralImage pairs = central_image(w);
    const std::size_t m = pairs.size();

    auto segment_word = [&](std::size_t i, std::size_t j) {
        return from_central_image(CentralImage(pairs.begin() + static_cast<std::ptrdiff_t>(i),
                                               pairs.begin() + static_cast<std::ptrdiff_t>(j)));
    };

    // suffix_ok[i]: pairs [i, m) split into segments whose preimage is Dyck.
    std::vector<char> suffix_ok(m + 1, 0);
    suffix_ok[m] = 1;
    for (std::size_t i = m; i-- > 0;) {
        for (std::size_t j = i + 1; j <= m; ++j) {
            if (suffix_ok[j] && is_dyck(segment_word(i, j))) {
                suffix_ok[i] = 1;
                break;
            }
        }
    }

    // Freeness of the monoid makes the shortest viable prefix at each step
    // the next irreducible factor.
    std::vector<std::string> factors;
    std::size_t i = 0;
    while (i < m) {
        std::size_t next = m + 1;
        for (std::size_t j = i + 1; j <= m; ++j) {
            if (suffix_ok[j] && is_dyck(segment_word(i, j))) {
                next = j;
                break;
            }
        }
        if (next > m)
            throw std::logic_error("central factorization failed on a Dyck word");
        factors.push_back(segment_word(i, next));
        i = next;
    }
    return factors;
}

std::size_t centered_tunnels_via_factorization(std::string_view w) {
    const auto factors = central_factorization(w);
    return static_cast<std::size_t>(
        std::count(factors.begin(), factors.end(), std::string("ab")));
}

std::vector<std::string> enumerate_symmetric_dyck(std::size_t max_len) {
    if (max_len % 2 != 0)
        throw std::invalid_argument("max_len must be even");
    if (max_len > 60)
        throw std::invalid_argument("max_len too large to enumerate");
    std::vector<std::string> out;
    for (std::size_t half = 0; 2 * half <= max_len; ++half) {
        const std::uint64_t limit = std::uint64_t{1} << half;
        for (std::uint64_t bits = 0; bits < limit; ++bits) {
            // Free first half; second half is forced by the symmetry.
            std::string w(2 * half, 'a');
            for (std::size_t k = 0; k < half; ++k) {
                const char c = (bits >> (half - 1 - k)) & 1 ? 'b' : 'a';
                w[k] = c;
                w[2 * half - 1 - k] = mirror_letter(c);
            }
            if (is_dyck(w)) out.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace dyckdiv
