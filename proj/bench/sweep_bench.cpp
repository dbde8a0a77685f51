// Times the verification sweeps on the serial reference path and on the
// OpenMP path with increasing worker counts, checking that every run
// produces the same report.

#include "dyckdiv/harness.hpp"
#include "dyckdiv/rational.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

using namespace dyckdiv;

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(Fn&& fn) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t n_max = 200000;
    if (argc > 1) n_max = std::strtoull(argv[1], nullptr, 10);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned max_jobs = hw;
    if (argc > 2) max_jobs = static_cast<unsigned>(std::strtoul(argv[2], nullptr, 10));
    if (n_max == 0 || max_jobs == 0) {
        std::fprintf(stderr, "usage: %s [n_max] [max_jobs]\n", argv[0]);
        return 2;
    }

    std::vector<int> job_counts{1};
    for (int j = 2; static_cast<unsigned>(j) <= max_jobs; j *= 2) job_counts.push_back(j);
    if (job_counts.back() != static_cast<int>(max_jobs))
        job_counts.push_back(static_cast<int>(max_jobs));

    const Rational two(2, 1);
    std::printf("sweep benchmark, n_max=%llu, hardware threads=%u\n",
                static_cast<unsigned long long>(n_max), hw);
    std::printf("%-12s %6s %12s %9s %8s\n", "sweep", "jobs", "elapsed_ms", "speedup",
                "status");

    for (const char* name : {"hoft", "lemmas"}) {
        const bool hoft = std::string(name) == "hoft";
        VerificationReport baseline;
        double serial_ms = 0;
        for (const int jobs : job_counts) {
            SweepOptions opts;
            opts.jobs = jobs;
            VerificationReport rep;
            const double ms = time_ms([&] {
                rep = hoft ? verify_hoft(two, 1, n_max, opts)
                           : check_lemma_suite(two, 1, n_max, opts);
            });
            if (jobs == 1) {
                baseline = rep;
                serial_ms = ms;
            }
            const bool same = rep.counterexamples == baseline.counterexamples &&
                              rep.checked == baseline.checked;
            std::printf("%-12s %6d %12.1f %8.2fx %8s\n", name, jobs, ms,
                        serial_ms / ms, same ? (rep.pass() ? "PASS" : "FAIL") : "MISMATCH");
            if (!same) return 1;
        }
    }
    return 0;
}
