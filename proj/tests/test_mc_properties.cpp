// Statistical size and power properties measured by Monte Carlo. Bands are
// at least three Monte Carlo standard errors wide at the stated replication
// counts, so these are stable despite being stochastic.

#include <doctest.h>

#include "tsecon/mclab.hpp"
#include "tsecon/rng.hpp"

using namespace tsecon;

namespace {

TestRunner johansen_rank_detector(int true_rank_threshold) {
    return {"johansen_rank_detect",
            [true_rank_threshold](const Dataset& ds) {
                const JohansenResult res =
                    johansen_trace(ds, 0, JohansenCase::RestrictedConstant);
                return res.selected_rank >= true_rank_threshold ? 0.0 : 1.0;
            }};
}

}  // namespace

TEST_CASE("adf size on random walks is close to nominal") {
    const SizePowerReport r =
        rejection_rate(adf_runner(), DgpSpec::random_walk(1, 250, 8101), 2000, 0.05, true);
    CHECK(r.failures == 0);
    CHECK(r.rate >= 0.035);
    CHECK(r.rate <= 0.065);
}

TEST_CASE("johansen rank-0 over-rejection stays near nominal") {
    const SizePowerReport r = rejection_rate(johansen_rank_detector(1),
                                             DgpSpec::random_walk(3, 250, 8102), 2000, 0.05,
                                             true);
    CHECK(r.failures == 0);
    CHECK(r.rate >= 0.03);
    CHECK(r.rate <= 0.08);
}

TEST_CASE("gamma-approximation p-values agree with the critical-value decision") {
    // the two rejection rules (p < 0.05 vs trace > cv5) may only disagree in
    // a thin band around the critical value
    int agree = 0;
    const int reps = 400;
    for (int r = 0; r < reps; ++r) {
        DgpSpec spec = DgpSpec::random_walk(3, 250, 0);
        spec.seed = derive_seed(8103, static_cast<std::uint64_t>(r));
        const JohansenResult res =
            johansen_trace(simulate(spec), 0, JohansenCase::RestrictedConstant);
        const bool by_p = res.rows[0].p_value < 0.05;
        const bool by_cv = res.rows[0].trace_stat > res.rows[0].cv_5pct;
        if (by_p == by_cv) ++agree;
    }
    CHECK(agree >= reps * 97 / 100);
}

TEST_CASE("toda-yamamoto size under independence is close to nominal") {
    const SizePowerReport r =
        rejection_rate(ty_runner(1, 1), DgpSpec::independent(250, 8104), 2000, 0.05, true);
    CHECK(r.failures == 0);
    CHECK(r.rate >= 0.035);
    CHECK(r.rate <= 0.065);
}

TEST_CASE("johansen detects a bivariate cointegrated system") {
    const SizePowerReport r =
        rejection_rate(johansen_rank_detector(1),
                       DgpSpec::cointegrated(Eigen::Vector2d(1.0, -1.0), 500, 8105), 500, 0.05,
                       true);
    CHECK(r.rate >= 0.90);
}

TEST_CASE("toda-yamamoto detects a moderate causal coefficient") {
    const SizePowerReport r =
        rejection_rate(ty_runner(1, 1), DgpSpec::causal(0.5, 250, 8106), 500, 0.05, true);
    CHECK(r.rate >= 0.90);
}

TEST_CASE("declared cointegrating combination is stationary by the adf test") {
    // project each simulated system onto its declared vector and test it
    TestRunner combo{"adf_on_combination", [](const Dataset& ds) {
                         const Eigen::VectorXd z =
                             ds.observations().col(0) - ds.observations().col(1);
                         const std::vector<double> v(z.data(), z.data() + z.size());
                         return adf_test(std::span<const double>(v)).p_value;
                     }};
    const SizePowerReport r = rejection_rate(
        combo, DgpSpec::cointegrated(Eigen::Vector2d(1.0, -1.0), 500, 8107), 500, 0.05, true);
    CHECK(r.rate >= 0.95);
}
