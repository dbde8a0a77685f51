#include "dyckdiv/output.hpp"

#include "dyckdiv/dyck.hpp"

#include <sstream>

namespace dyckdiv {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

WordStats compute_stats(std::uint64_t n, const Rational& lambda) {
    WordStats s{.n = n,
                .lambda = lambda,
                .word = encode(n, lambda),
                .height = 0,
                .omega = 0,
                .ct = 0,
                .ell_aa = 0,
                .ell_ab = 0,
                .ell_ba = 0,
                .ell_bb = 0,
                .profile = profile(n, lambda)};
    s.height = height(s.word);
    s.omega = irreducible_factor_count(s.word);
    s.ct = centered_tunnels(s.word);
    s.ell_aa = pair_count(PairLetter::aa, s.word);
    s.ell_ab = pair_count(PairLetter::ab, s.word);
    s.ell_ba = pair_count(PairLetter::ba, s.word);
    s.ell_bb = pair_count(PairLetter::bb, s.word);
    return s;
}

ojson stats_json(const WordStats& s) {
    return ojson{{"n", s.n},
                 {"lambda", s.lambda.str()},
                 {"word", s.word},
                 {"height", s.height},
                 {"omega", s.omega},
                 {"ct", s.ct},
                 {"ell_aa", s.ell_aa},
                 {"ell_ab", s.ell_ab},
                 {"ell_ba", s.ell_ba},
                 {"ell_bb", s.ell_bb},
                 {"middle", s.profile.middle_count},
                 {"blocks", s.profile.blocks_count},
                 {"densely_divisible", s.profile.densely_divisible},
                 {"even_trapezoidal", s.profile.even_trapezoidal},
                 {"pythagorean_semiperimeter", s.profile.pythagorean_semiperimeter},
                 {"power_of_two", s.profile.power_of_two}};
}

std::string stats_csv_header() {
    return "n,lambda,word,height,omega,ct,ell_aa,ell_ab,ell_ba,ell_bb,middle,blocks,"
           "densely_divisible,even_trapezoidal,pythagorean_semiperimeter,power_of_two";
}

std::string stats_csv_row(const WordStats& s) {
    std::ostringstream os;
    os << s.n << ',' << s.lambda.str() << ',' << s.word << ',' << s.height << ','
       << s.omega << ',' << s.ct << ',' << s.ell_aa << ',' << s.ell_ab << ','
       << s.ell_ba << ',' << s.ell_bb << ',' << s.profile.middle_count << ','
       << s.profile.blocks_count << ',' << bool_str(s.profile.densely_divisible) << ','
       << bool_str(s.profile.even_trapezoidal) << ','
       << bool_str(s.profile.pythagorean_semiperimeter) << ','
       << bool_str(s.profile.power_of_two);
    return os.str();
}

std::string stats_human(const WordStats& s) {
    std::ostringstream os;
    os << "n: " << s.n << '\n'
       << "lambda: " << s.lambda.str() << '\n'
       << "word: " << s.word << '\n'
       << "height: " << s.height << '\n'
       << "omega: " << s.omega << '\n'
       << "ct: " << s.ct << '\n'
       << "ell_aa: " << s.ell_aa << '\n'
       << "ell_ab: " << s.ell_ab << '\n'
       << "ell_ba: " << s.ell_ba << '\n'
       << "ell_bb: " << s.ell_bb << '\n'
       << "middle: " << s.profile.middle_count << '\n'
       << "blocks: " << s.profile.blocks_count << '\n'
       << "densely_divisible: " << bool_str(s.profile.densely_divisible) << '\n'
       << "even_trapezoidal: " << bool_str(s.profile.even_trapezoidal) << '\n'
       << "pythagorean_semiperimeter: " << bool_str(s.profile.pythagorean_semiperimeter)
       << '\n'
       << "power_of_two: " << bool_str(s.profile.power_of_two) << '\n';
    return os.str();
}

ojson encode_json(std::uint64_t n, const Rational& lambda, std::string_view word,
                  const CutSequence& cuts) {
    ojson entries = ojson::array();
    for (const auto& c : cuts)
        entries.push_back(ojson{{"value", c.value.str()},
                                {"tag", std::string(1, c.letter)},
                                {"divisor", c.divisor}});
    return ojson{{"n", n},
                 {"lambda", lambda.str()},
                 {"word", std::string(word)},
                 {"cuts", entries}};
}

std::string encode_human(std::uint64_t n, const Rational& lambda, std::string_view word,
                         const CutSequence& cuts) {
    std::ostringstream os;
    os << "n: " << n << '\n' << "lambda: " << lambda.str() << '\n'
       << "word: " << word << '\n' << "cut sequence:" << '\n';
    for (const auto& c : cuts)
        os << "  " << c.value.str() << "\t" << c.letter << "\t(divisor " << c.divisor
           << ")\n";
    return os.str();
}

ojson report_json(const VerificationReport& r) {
    ojson j;
    j["theorem"] = r.theorem_id;
    if (r.lambda) j["lambda"] = r.lambda->str();
    j["range"] = {r.n_lo, r.n_hi};
    j["checked"] = r.checked;
    j["status"] = r.pass() ? "PASS" : "FAIL";
    ojson cxs = ojson::array();
    for (const auto& cx : r.counterexamples)
        cxs.push_back(ojson{{"n", cx.n},
                            {"expected", cx.expected},
                            {"actual", cx.actual},
                            {"word", cx.word}});
    j["counterexamples"] = cxs;
    j["elapsed_ms"] = r.elapsed.count();
    return j;
}

std::string report_csv_header() {
    return "theorem,lambda,lo,hi,checked,status,counterexamples,elapsed_ms";
}

std::string report_csv_row(const VerificationReport& r) {
    std::ostringstream os;
    os << r.theorem_id << ',' << (r.lambda ? r.lambda->str() : "") << ',' << r.n_lo
       << ',' << r.n_hi << ',' << r.checked << ',' << (r.pass() ? "PASS" : "FAIL")
       << ',' << r.counterexamples.size() << ',' << r.elapsed.count();
    return os.str();
}

std::string report_human(const VerificationReport& r) {
    std::ostringstream os;
    os << "theorem: " << r.theorem_id << '\n';
    if (r.lambda) os << "lambda: " << r.lambda->str() << '\n';
    os << "range: [" << r.n_lo << ", " << r.n_hi << "]\n"
       << "checked: " << r.checked << '\n'
       << "status: " << (r.pass() ? "PASS" : "FAIL") << '\n';
    for (const auto& cx : r.counterexamples) {
        os << "counterexample:";
        if (cx.n != 0) os << " n=" << cx.n;
        if (!cx.word.empty()) os << " word=" << cx.word;
        os << " expected=[" << cx.expected << "] actual=[" << cx.actual << "]\n";
    }
    os << "elapsed_ms: " << r.elapsed.count() << '\n';
    return os.str();
}

ojson sequence_json(std::string_view pred, const Rational& lambda, std::uint64_t n_max,
                    const std::vector<std::uint64_t>& values) {
    return ojson{{"pred", std::string(pred)},
                 {"lambda", lambda.str()},
                 {"n_max", n_max},
                 {"values", values}};
}

}  // namespace dyckdiv
