// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Criteria cover the reproducible anchors (information-criterion
// identity chain, chi-square and trace-distribution reference points),
// oracle equivalences, noiseless identification, Monte Carlo size and power
// bands, pipeline determinism, and the synthetic-data caveat.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tsecon/causality.hpp"
#include "tsecon/cointegration.hpp"
#include "tsecon/demo.hpp"
#include "tsecon/mclab.hpp"
#include "tsecon/pipeline.hpp"
#include "tsecon/report.hpp"
#include "tsecon/varmodel.hpp"

using namespace tsecon;
namespace fs = std::filesystem;

namespace {

struct Check {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void close(double got, double want, double tol, const std::string& what) {
        if (!(std::abs(got - want) <= tol)) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%s: got %.6g, want %.6g (tol %.3g)", what.c_str(),
                          got, want, tol);
            failures.push_back(buf);
        }
    }
};

// ---------------------------------------------------------------- criterion 1
void criterion_identity_chain(Check& c) {
    const std::vector<double> loglik{-3363.74, -2903.26, -2878.49, -2859.55, -2855.13,
                                     -2847.11, -2840.13, -2837.45, -2835.08};
    const double lr[9] = {0, 896.23, 47.22, 35.32, 8.08, 14.30, 12.18, 4.55, 3.94};
    const double fpe[9] = {8.49e15, 1.98e13, 1.60e13, 1.40e13, 1.49e13,
                           1.52e13, 1.56e13, 1.70e13, 1.87e13};
    const double aic[9] = {45.19, 39.13, 38.91, 38.78, 38.84, 38.86, 38.88, 38.97, 39.06};
    const double sc[9] = {45.25, 39.37, 39.34, 39.39, 39.63, 39.82, 40.03, 40.30, 40.57};
    const double hq[9] = {45.21, 39.22, 39.09, 39.03, 39.16, 39.25, 39.35, 39.51, 39.67};

    const LagSelectionTable table = selection_table(loglik, 149, 3);
    c.require(table.rows.size() == 9, "nine rows");
    for (int p = 0; p < 9; ++p) {
        const auto& r = table.rows[static_cast<std::size_t>(p)];
        const std::string tag = "p=" + std::to_string(p);
        if (p == 0) {
            c.require(!r.lr.has_value(), tag + " LR absent");
        } else {
            c.require(r.lr.has_value(), tag + " LR present");
            if (r.lr) c.close(*r.lr, lr[p], 0.2, tag + " LR");
        }
        c.require(std::abs(r.fpe - fpe[p]) / fpe[p] <= 0.02, tag + " FPE within 2%");
        c.close(r.aic, aic[p], 0.01, tag + " AIC");
        c.close(r.sc, sc[p], 0.01, tag + " SC");
        c.close(r.hq, hq[p], 0.01, tag + " HQ");
    }
    c.require(table.selected_lr == 3, "LR mark at lag 3");
    c.require(table.selected_fpe == 3, "FPE minimum at lag 3");
    c.require(table.selected_aic == 3, "AIC minimum at lag 3");
    c.require(table.selected_hq == 3, "HQ minimum at lag 3");
    c.require(table.selected_sc == 2, "SC minimum at lag 2");
}

// ---------------------------------------------------------------- criterion 2
void criterion_chi_square(Check& c) {
    c.close(chi_square_survival(3.2017, 4), 0.5246, 0.0005, "survival(3.2017, 4)");
    c.close(chi_square_survival(3.9824, 4), 0.4084, 0.0005, "survival(3.9824, 4)");
    c.close(chi_square_survival(9.5480, 9), 0.3883, 0.0005, "survival(9.5480, 9)");
}

// ---------------------------------------------------------------- criterion 3
void criterion_trace_table(Check& c) {
    c.close(trace_critical_value(3, JohansenCase::RestrictedConstant), 35.1927, 1e-12,
            "cv(3, restricted constant)");
    c.close(trace_critical_value(2, JohansenCase::RestrictedConstant), 20.2618, 1e-12,
            "cv(2, restricted constant)");
    c.close(trace_critical_value(1, JohansenCase::RestrictedConstant), 9.1645, 1e-12,
            "cv(1, restricted constant)");
    c.close(trace_pvalue(20.1646, 3, JohansenCase::RestrictedConstant), 0.7164, 0.02,
            "p(20.1646, 3)");
    c.close(trace_pvalue(9.0433, 2, JohansenCase::RestrictedConstant), 0.7322, 0.02,
            "p(9.0433, 2)");
    c.close(trace_pvalue(2.1796, 1, JohansenCase::RestrictedConstant), 0.7417, 0.02,
            "p(2.1796, 1)");
}

// ---------------------------------------------------------------- criterion 4
void criterion_oracles(Check& c) {
    // least squares vs hand-solved normal equations
    Eigen::VectorXd y(4);
    y << 0, 1, 1, 2;
    Eigen::MatrixXd X(4, 2);
    X << 1, 0, 1, 1, 1, 2, 1, 3;
    const double det = 4.0 * 14.0 - 6.0 * 6.0;
    const OlsFit fit = ols(y, X);
    c.close(fit.coef(0), (14.0 * 4.0 - 6.0 * 9.0) / det, 1e-10, "ols intercept");
    c.close(fit.coef(1), (4.0 * 9.0 - 6.0 * 4.0) / det, 1e-10, "ols slope");

    // eigenvalues vs hand-solved characteristic polynomials
    Eigen::MatrixXd a(2, 2);
    a << 0.5, 0.2, 0.1, 0.4;
    auto roots = eigenvalues(a);
    std::sort(roots.begin(), roots.end(),
              [](const auto& l, const auto& r) { return l.real() > r.real(); });
    c.require(std::abs(roots[0] - std::complex<double>(0.6, 0.0)) < 1e-8, "root 0.6");
    c.require(std::abs(roots[1] - std::complex<double>(0.3, 0.0)) < 1e-8, "root 0.3");
    Eigen::MatrixXd rot(2, 2);
    rot << 0, -1, 1, 0;
    for (const auto& ev : eigenvalues(rot)) {
        c.require(std::abs(std::abs(ev) - 1.0) < 1e-10, "rotation roots on the unit circle");
    }

    // single-restriction Wald equals the squared t-ratio
    const Dataset ds = simulate(DgpSpec::causal(0.4, 200, 55));
    const VarFit var = fit_var(ds, 2, true);
    const int idx = var.regressor_index(1, 1);
    const double s2 = var.resid.col(0).squaredNorm() / (var.t_eff - var.m);
    const double t = var.coef_raw(idx, 0) / std::sqrt(s2 * var.xtx_inv(idx, idx));
    const WaldResult w = wald_linear_restriction(var, 0, {idx});
    c.close(w.statistic, t * t, 1e-10 * std::max(1.0, t * t), "wald vs squared t");
}

// ---------------------------------------------------------------- criterion 5
void criterion_noiseless(Check& c) {
    Eigen::MatrixXd A(2, 2);
    A << 0.5, 0.2, 0.1, 0.4;
    Eigen::MatrixXd obs(25, 2);
    Eigen::Vector2d yv(1.0, 2.0);
    for (int t = 0; t < 25; ++t) {
        obs.row(t) = yv.transpose();
        yv = A * yv;
    }
    const Dataset ds(std::vector<std::string>{"a", "b"}, Period{2000, 1}, obs);
    const VarFit fit = fit_var(ds, 1, false);
    c.require((fit.lag_coef[0] - A).cwiseAbs().maxCoeff() < 1e-10,
              "noiseless VAR(1) coefficients");

    VarFit half;
    half.k = 3;
    half.p = 1;
    half.lag_coef = {0.5 * Eigen::MatrixXd::Identity(3, 3)};
    for (double m : stability(half).moduli) {
        c.require(std::abs(m - 0.5) < 1e-10, "companion roots of 0.5 I");
    }
}

// ---------------------------------------------------------------- criterion 6
void criterion_mc_size(Check& c) {
    const SizePowerReport adf =
        rejection_rate(adf_runner(), DgpSpec::random_walk(1, 250, 8101), 2000, 0.05, true);
    c.require(adf.rate >= 0.035 && adf.rate <= 0.065,
              "adf size " + std::to_string(adf.rate) + " in [0.035, 0.065]");

    TestRunner rank_detect{"johansen_rank_gt0", [](const Dataset& d) {
                               return johansen_trace(d, 0, JohansenCase::RestrictedConstant)
                                              .selected_rank > 0
                                          ? 0.0
                                          : 1.0;
                           }};
    const SizePowerReport joh =
        rejection_rate(rank_detect, DgpSpec::random_walk(3, 250, 8102), 2000, 0.05, true);
    c.require(joh.rate >= 0.03 && joh.rate <= 0.08,
              "johansen rank-0 over-rejection " + std::to_string(joh.rate) + " in [0.03, 0.08]");

    const SizePowerReport ty =
        rejection_rate(ty_runner(1, 1), DgpSpec::independent(250, 8104), 2000, 0.05, true);
    c.require(ty.rate >= 0.035 && ty.rate <= 0.065,
              "toda-yamamoto size " + std::to_string(ty.rate) + " in [0.035, 0.065]");
}

// ---------------------------------------------------------------- criterion 7
void criterion_mc_power(Check& c) {
    TestRunner rank_detect{"johansen_rank_ge1", [](const Dataset& d) {
                               return johansen_trace(d, 0, JohansenCase::RestrictedConstant)
                                              .selected_rank >= 1
                                          ? 0.0
                                          : 1.0;
                           }};
    const SizePowerReport joh = rejection_rate(
        rank_detect, DgpSpec::cointegrated(Eigen::Vector2d(1.0, -1.0), 500, 8105), 500, 0.05,
        true);
    c.require(joh.rate >= 0.90, "johansen power " + std::to_string(joh.rate) + " >= 0.90");

    const SizePowerReport ty =
        rejection_rate(ty_runner(1, 1), DgpSpec::causal(0.5, 250, 8106), 500, 0.05, true);
    c.require(ty.rate >= 0.90, "toda-yamamoto power " + std::to_string(ty.rate) + " >= 0.90");
}

// ---------------------------------------------------------------- criterion 8
void criterion_pipeline_determinism(Check& c) {
    const fs::path root = fs::temp_directory_path() / "tsecon_acceptance";
    fs::remove_all(root);
    const DemoFiles files = write_demo(root.string(), kDemoSeed);
    const PipelineConfig cfg = load_config(files.config_path);

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    const ReportBundle run1 = run_pipeline(cfg);
    emit_report(run1, (root / "out1").string());
    const ReportBundle run2 = run_pipeline(cfg);
    emit_report(run2, (root / "out2").string());

    c.require(slurp(root / "out1" / "results.json") == slurp(root / "out2" / "results.json"),
              "results.json byte-identical across runs");
    c.require(slurp(root / "out1" / "roots.svg") == slurp(root / "out2" / "roots.svg"),
              "roots.svg byte-identical across runs");

    c.require(run1.johansen.selected_rank == 0, "demo run selects cointegration rank 0");
    for (const auto& t : run1.causality) {
        c.require(t.p_value >= cfg.alpha,
                  "no causality at 5%: " + t.cause + " -> " + t.target + " p=" +
                      std::to_string(t.p_value));
    }
}

// ---------------------------------------------------------------- criterion 9
void criterion_data_caveat(Check& c) {
#ifdef TSECON_SOURCE_DIR
    const fs::path readme_path = fs::path(TSECON_SOURCE_DIR) / "README.md";
#else
    const fs::path readme_path = "README.md";
#endif
    std::string readme;
    {
        std::ifstream in(readme_path);
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            readme = ss.str();
        }
    }
    c.require(!readme.empty(), "README.md found at " + readme_path.string());
    c.require(readme.find("synthetic") != std::string::npos,
              "README states the demo data are synthetic");
    c.require(readme.find("not reproducible") != std::string::npos,
              "README states reference outputs are not reproducible");

    const fs::path root = fs::temp_directory_path() / "tsecon_acceptance";
    const auto meta_path = root / "out1" / "run_meta.json";
    std::ifstream in(meta_path);
    c.require(static_cast<bool>(in), "run_meta.json emitted");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string meta = ss.str();
    c.require(meta.find("synthetic") != std::string::npos,
              "run metadata states the demo data are synthetic");
    c.require(meta.find("not reproducible") != std::string::npos,
              "run metadata states published values are not reproducible");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Check&)> fn;
    };
    const std::vector<Criterion> criteria{
        {"1. information-criterion identity chain and minimizer marks", criterion_identity_chain},
        {"2. chi-square survival reference points", criterion_chi_square},
        {"3. trace critical values and p-values", criterion_trace_table},
        {"4. least-squares / eigenvalue / Wald oracle equivalence", criterion_oracles},
        {"5. noiseless identification", criterion_noiseless},
        {"6. Monte Carlo size bands", criterion_mc_size},
        {"7. Monte Carlo power thresholds", criterion_mc_power},
        {"8. pipeline determinism and demo outcome", criterion_pipeline_determinism},
        {"9. synthetic-data caveat in README and run metadata", criterion_data_caveat},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criterion.fn(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (check.failures.empty()) {
            std::printf("[PASS] %s (%.2fs)\n", criterion.name, secs);
        } else {
            ++failed;
            std::printf("[FAIL] %s (%.2fs)\n", criterion.name, secs);
            for (const auto& f : check.failures) std::printf("       - %s\n", f.c_str());
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
