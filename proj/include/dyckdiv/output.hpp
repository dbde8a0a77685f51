#pragma once

#include "dyckdiv/encoder.hpp"
#include "dyckdiv/harness.hpp"
#include "dyckdiv/oracles.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dyckdiv {

using ojson = nlohmann::ordered_json;

/// Field names follow the wire format of the stats command.
struct WordStats {
    std::uint64_t n;
    Rational lambda;
    std::string word;
    std::size_t height;
    std::size_t omega;
    std::size_t ct;
    std::size_t ell_aa;
    std::size_t ell_ab;
    std::size_t ell_ba;
    std::size_t ell_bb;
    IntegerProfile profile;
};

WordStats compute_stats(std::uint64_t n, const Rational& lambda);

ojson stats_json(const WordStats& s);
std::string stats_csv_header();
std::string stats_csv_row(const WordStats& s);
std::string stats_human(const WordStats& s);

ojson encode_json(std::uint64_t n, const Rational& lambda, std::string_view word,
                  const CutSequence& cuts);
std::string encode_human(std::uint64_t n, const Rational& lambda, std::string_view word,
                         const CutSequence& cuts);

ojson report_json(const VerificationReport& r);
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& r);
std::string report_human(const VerificationReport& r);

ojson sequence_json(std::string_view pred, const Rational& lambda, std::uint64_t n_max,
                    const std::vector<std::uint64_t>& values);

}  // namespace dyckdiv
