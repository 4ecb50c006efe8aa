// Benchmark of the Monte Carlo engine: OpenMP path against the serial
// reference. The two must produce identical reports (per-replication seeds
// make aggregation order-independent); the benchmark asserts that before
// timing.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tsecon/mclab.hpp"

using namespace tsecon;

namespace {

double run_timed(const TestRunner& test, const DgpSpec& dgp, int reps, bool parallel,
                 SizePowerReport& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = rejection_rate(test, dgp, reps, 0.05, parallel);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 400;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both paths run serially\n");
#endif

    struct Case {
        const char* label;
        TestRunner test;
        DgpSpec dgp;
    };
    const Case cases[] = {
        {"ADF size, random walk T=250", adf_runner(), DgpSpec::random_walk(1, 250, 42)},
        {"Johansen rank-0 size, k=3 T=250", johansen_rank0_runner(),
         DgpSpec::random_walk(3, 250, 43)},
        {"Toda-Yamamoto size, T=250", ty_runner(), DgpSpec::independent(250, 44)},
    };

    for (const auto& c : cases) {
        SizePowerReport serial_report, parallel_report;
        const double ts = run_timed(c.test, c.dgp, reps, false, serial_report);
        const double tp = run_timed(c.test, c.dgp, reps, true, parallel_report);
        const bool same = serial_report.rejections == parallel_report.rejections &&
                          serial_report.failures == parallel_report.failures;
        std::printf("%-34s serial %7.3fs  parallel %7.3fs  speedup %5.2fx  match %s\n", c.label,
                    ts, tp, ts / tp, same ? "yes" : "NO");
        if (!same) {
            std::fprintf(stderr, "serial and parallel paths disagree\n");
            return 1;
        }
    }
    return 0;
}
