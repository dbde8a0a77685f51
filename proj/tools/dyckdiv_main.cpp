// Command-line front end: encode integers, print statistics profiles, run
// verification sweeps, emit predicate sequences.
//
// Exit codes: 0 all checks passed, 1 counterexamples found, 2 usage or parse
// error, 3 internal error.

#include "dyckdiv/dyck.hpp"
#include "dyckdiv/encoder.hpp"
#include "dyckdiv/harness.hpp"
#include "dyckdiv/oracles.hpp"
#include "dyckdiv/output.hpp"
#include "dyckdiv/rational.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace dyckdiv;

enum class Format { human, json, csv };

Format parse_format(const std::string& text) {
    if (text == "human") return Format::human;
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    throw std::invalid_argument("unknown format: '" + text + "'");
}

struct CommonArgs {
    std::string lambda_text = "2";
    std::string format_text = "human";
};

int run_encode(std::uint64_t n, const CommonArgs& args) {
    const Rational lambda = parse_lambda(args.lambda_text);
    const Format format = parse_format(args.format_text);
    const CutSequence cuts = cut_sequence(n, lambda);
    const std::string word = encode(n, lambda);
    switch (format) {
        case Format::human:
            std::cout << encode_human(n, lambda, word, cuts);
            break;
        case Format::json:
            std::cout << encode_json(n, lambda, word, cuts).dump() << '\n';
            break;
        case Format::csv: {
            std::cout << "n,lambda,word\n"
                      << n << ',' << lambda.str() << ',' << word << '\n';
            break;
        }
    }
    return 0;
}

int run_stats(std::uint64_t n, const CommonArgs& args) {
    const Rational lambda = parse_lambda(args.lambda_text);
    const Format format = parse_format(args.format_text);
    const WordStats s = compute_stats(n, lambda);
    switch (format) {
        case Format::human:
            std::cout << stats_human(s);
            break;
        case Format::json:
            std::cout << stats_json(s).dump() << '\n';
            break;
        case Format::csv:
            std::cout << stats_csv_header() << '\n' << stats_csv_row(s) << '\n';
            break;
    }
    return 0;
}

std::vector<VerificationReport> run_theorem(const std::string& theorem,
                                            const Rational& lambda, std::uint64_t n_max,
                                            std::size_t lang_len,
                                            const SweepOptions& opts) {
    if (theorem == "lemmas") return {check_lemma_suite(lambda, 1, n_max, opts)};
    if (theorem == "hoft") return {verify_hoft(lambda, 1, n_max, opts)};
    if (theorem == "pow2-trapezoid") return {verify_pow2_trapezoid(1, n_max, opts)};
    if (theorem == "pow2-dense") return {verify_pow2_dense(1, n_max, opts)};
    if (theorem == "characterizations") {
        std::vector<VerificationReport> reports;
        for (PredicateId pred :
             {PredicateId::MiddlePositive, PredicateId::BlocksOdd,
              PredicateId::PowerOfTwo, PredicateId::NotTrapezoidal,
              PredicateId::NotPyth, PredicateId::DenselyDivisible})
            reports.push_back(check_characterization(
                pred, characterization_language(pred), lambda, n_max, opts));
        return reports;
    }
    if (theorem == "languages") {
        std::vector<VerificationReport> reports;
        reports.push_back(check_language_equality(LangKind::CtPositive,
                                                  LangKind::OmegaOdd, lang_len,
                                                  /*symmetric_only=*/true, opts));
        reports.push_back(check_language_equality(
            LanguageSpec(LangKind::AKBK, LangKind::AbStar), LangKind::SingletonAb,
            lang_len, /*symmetric_only=*/false, opts));
        reports.push_back(check_language_equality(
            LanguageSpec(LangKind::IrreducibleDyck, LangKind::AbStar),
            LangKind::SingletonAb, lang_len, /*symmetric_only=*/false, opts));
        return reports;
    }
    throw std::invalid_argument("unknown theorem: '" + theorem + "'");
}

int run_verify(const std::string& theorem, std::uint64_t n_max_opt, const CommonArgs& args,
               int jobs, std::size_t max_cx) {
    const Rational lambda = parse_lambda(args.lambda_text);
    const Format format = parse_format(args.format_text);
    SweepOptions opts;
    opts.jobs = jobs;
    opts.max_counterexamples = max_cx;
    opts.progress = true;  // stderr only; stdout stays machine-clean

    // For the language suite --nmax bounds the word length instead of n.
    const bool languages = theorem == "languages";
    const std::uint64_t n_max = n_max_opt != 0 ? n_max_opt : (languages ? 20 : 10000);
    const std::size_t lang_len = languages ? static_cast<std::size_t>(n_max) : 0;
    const auto reports = run_theorem(theorem, lambda, n_max, lang_len, opts);

    bool all_pass = true;
    if (format == Format::json) {
        if (reports.size() == 1) {
            std::cout << report_json(reports.front()).dump() << '\n';
        } else {
            ojson arr = ojson::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            std::cout << arr.dump() << '\n';
        }
    } else if (format == Format::csv) {
        std::cout << report_csv_header() << '\n';
        for (const auto& r : reports) std::cout << report_csv_row(r) << '\n';
    } else {
        for (const auto& r : reports) std::cout << report_human(r) << '\n';
    }
    for (const auto& r : reports) all_pass = all_pass && r.pass();
    return all_pass ? 0 : 1;
}

int run_sequence(const std::string& pred_text, std::uint64_t n_max,
                 const CommonArgs& args) {
    const Rational lambda = parse_lambda(args.lambda_text);
    const Format format = parse_format(args.format_text);

    std::string canonical = pred_text;
    for (char& c : canonical) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (c == '-') c = '_';
    }
    const PredicateId pred = predicate_from_name(canonical);

    std::vector<bool> pyth;
    if (pred == PredicateId::NotPyth) pyth = pythagorean_semiperimeter_sieve(n_max);
    auto eval = [&](std::uint64_t n) -> bool {
        switch (pred) {
            case PredicateId::MiddlePositive: return middle_count(n, lambda) > 0;
            case PredicateId::BlocksOdd: return blocks_count(n, lambda) % 2 == 1;
            case PredicateId::PowerOfTwo: return is_power_of_two(n);
            case PredicateId::NotTrapezoidal: return !is_even_trapezoidal(n);
            case PredicateId::NotPyth: return !pyth[n];
            case PredicateId::DenselyDivisible: return is_densely_divisible(n, lambda);
        }
        throw std::logic_error("bad predicate id");
    };

    std::vector<std::uint64_t> values;
    for (std::uint64_t n = 1; n <= n_max; ++n)
        if (eval(n)) values.push_back(n);

    switch (format) {
        case Format::human:
            for (std::uint64_t v : values) std::cout << v << '\n';
            break;
        case Format::json:
            std::cout << sequence_json(canonical, lambda, n_max, values).dump() << '\n';
            break;
        case Format::csv:
            std::cout << "n\n";
            for (std::uint64_t v : values) std::cout << v << '\n';
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dyck-word encodings of positive integers from divisor cuts,"
                 " word statistics, and exhaustive verification sweeps"};
    app.require_subcommand(1);

    CommonArgs common;
    std::uint64_t n = 1;
    std::uint64_t n_max = 0;  // 0 = per-theorem default
    std::string theorem;
    std::string pred;
    int jobs = 1;
    std::size_t max_cx = 10;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", common.lambda_text,
                        "Scale factor as P/Q or integer P (must exceed 1)")
            ->capture_default_str();
        cmd->add_option("--format", common.format_text, "human|json|csv")
            ->capture_default_str();
    };

    auto* cmd_encode = app.add_subcommand("encode", "Print the word and cut sequence of n");
    cmd_encode->add_option("--n", n, "Integer to encode")->required();
    add_common(cmd_encode);

    auto* cmd_stats =
        app.add_subcommand("stats", "Word statistics and arithmetic profile of n");
    cmd_stats->add_option("--n", n, "Integer to profile")->required();
    add_common(cmd_stats);

    auto* cmd_verify = app.add_subcommand(
        "verify", "Run a theorem sweep; exit 0 on pass, 1 on counterexamples");
    cmd_verify
        ->add_option("--theorem", theorem,
                     "hoft|pow2-trapezoid|pow2-dense|lemmas|characterizations|languages")
        ->required();
    cmd_verify->add_option(
        "--nmax", n_max,
        "Upper end of the sweep; default 10000 (word length bound for 'languages', default 20)");
    cmd_verify->add_option("--jobs", jobs, "Worker threads; identical output for any count")
        ->capture_default_str();
    cmd_verify->add_option("--max-counterexamples", max_cx, "Recording cap")
        ->capture_default_str();
    add_common(cmd_verify);

    auto* cmd_sequence =
        app.add_subcommand("sequence", "Emit all n <= nmax satisfying a predicate");
    cmd_sequence
        ->add_option("--pred", pred,
                     "MIDDLE_POSITIVE|BLOCKS_ODD|POWER_OF_TWO|NOT_TRAPEZOIDAL|"
                     "NOT_PYTH|DENSELY_DIVISIBLE")
        ->required();
    cmd_sequence->add_option("--nmax", n_max, "Upper end of the scan")->required();
    add_common(cmd_sequence);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_encode->parsed()) {
            if (n == 0) throw std::invalid_argument("--n must be positive");
            return run_encode(n, common);
        }
        if (cmd_stats->parsed()) {
            if (n == 0) throw std::invalid_argument("--n must be positive");
            return run_stats(n, common);
        }
        if (cmd_verify->parsed()) {
            if (cmd_verify->count("--nmax") > 0 && n_max == 0)
                throw std::invalid_argument("--nmax must be positive");
            if (jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
            return run_verify(theorem, n_max, common, jobs, max_cx);
        }
        if (cmd_sequence->parsed()) {
            if (n_max == 0) throw std::invalid_argument("--nmax must be positive");
            return run_sequence(pred, n_max, common);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
