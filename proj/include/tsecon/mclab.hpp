#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tsecon/causality.hpp"
#include "tsecon/cointegration.hpp"
#include "tsecon/series.hpp"
#include "tsecon/unitroot.hpp"

namespace tsecon {

// Synthetic data-generating processes with known truth. Innovations are
// standard Gaussian from the project's own generator chain (SplitMix64 seed
// derivation, xoshiro256++ uniforms, Box-Muller transform) with one
// independent substream per variable, so output is bit-identical for a given
// seed regardless of threading.
enum class DgpKind {
    RandomWalk,
    StationaryVar,
    CointegratedSystem,
    CausalBivariate,
    IndependentBivariate,
};

struct DgpSpec {
    DgpKind kind = DgpKind::RandomWalk;
    int k = 1;
    int T = 100;
    std::uint64_t seed = 0;
    std::vector<Eigen::MatrixXd> var_coef;          // StationaryVar lag matrices
    Eigen::Vector2d coint_vector{1.0, -1.0};        // CointegratedSystem
    double causal_coef = 0.5;                       // CausalBivariate x -> y strength
    double ar_coef = 0.5;                           // persistence of stationary pieces
    int true_rank = -1;                             // declared by CointegratedSystem

    static DgpSpec random_walk(int k, int T, std::uint64_t seed);
    static DgpSpec stationary_var(std::vector<Eigen::MatrixXd> coef, int T, std::uint64_t seed);
    static DgpSpec cointegrated(const Eigen::Vector2d& vec, int T, std::uint64_t seed);
    static DgpSpec causal(double coef, int T, std::uint64_t seed);
    static DgpSpec independent(int T, std::uint64_t seed);

    std::string id() const;
    void validate() const;  // InvalidSpecError on bad parameters
};

Dataset simulate(const DgpSpec& spec);

// A named test that maps a dataset to the p-value of its null test.
struct TestRunner {
    std::string id;
    std::function<double(const Dataset&)> p_value;
};

TestRunner adf_runner(Deterministic spec = Deterministic::Constant,
                      LagPolicy policy = LagPolicy::auto_schwarz());
TestRunner johansen_rank0_runner(int vecm_lag = 0,
                                 JohansenCase det_case = JohansenCase::RestrictedConstant);
TestRunner ty_runner(int p = 1, int d_max = 1,
                     RestrictionMode mode = RestrictionMode::FirstP);

struct SizePowerReport {
    std::string test_id;
    std::string dgp_id;
    int T = 0;
    int replications = 0;
    double alpha = 0.0;
    int rejections = 0;
    int failures = 0;  // replications aborted by a numerical error
    double rate = 0.0;
    double mc_se = 0.0;

    static std::string csv_header();
    std::string csv_row() const;
};

// Rejection frequency of `test` over independent replications of `dgp` at
// level alpha. Replication r uses seed derive_seed(dgp.seed, r); the result
// does not depend on execution order, so the OpenMP path and the serial
// reference path must agree exactly (kept and compared in the tests and the
// benchmark).
SizePowerReport rejection_rate(const TestRunner& test, const DgpSpec& dgp, int replications,
                               double alpha, bool parallel = true);

}  // namespace tsecon
