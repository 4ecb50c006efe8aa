// Command-line front end. Verbs: adf, var-select, var-fit, johansen, ty, mc,
// pipeline, demo-data. Exit codes: 0 success, 2 configuration error, 3 data
// error, 4 numerical failure.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "tsecon/causality.hpp"
#include "tsecon/cointegration.hpp"
#include "tsecon/csv.hpp"
#include "tsecon/demo.hpp"
#include "tsecon/mclab.hpp"
#include "tsecon/pipeline.hpp"
#include "tsecon/report.hpp"
#include "tsecon/unitroot.hpp"
#include "tsecon/varmodel.hpp"
#include "tsecon/version.hpp"

namespace {

using namespace tsecon;

Deterministic parse_spec(const std::string& s) {
    if (s == "none") return Deterministic::None;
    if (s == "constant") return Deterministic::Constant;
    if (s == "constant_trend") return Deterministic::ConstantAndTrend;
    throw ConfigError("unknown deterministic spec '" + s + "'");
}

JohansenCase parse_case(const std::string& s) {
    if (s == "no_deterministic") return JohansenCase::NoDeterministic;
    if (s == "restricted_constant") return JohansenCase::RestrictedConstant;
    if (s == "unrestricted_constant") return JohansenCase::UnrestrictedConstant;
    throw ConfigError("unknown Johansen case '" + s + "'");
}

LagPolicy parse_lags(const std::string& lags, int max_lags) {
    if (lags == "auto") return LagPolicy::auto_schwarz(max_lags);
    try {
        return LagPolicy::fixed(std::stoi(lags));
    } catch (const std::exception&) {
        throw ConfigError("--lags expects 'auto' or an integer, got '" + lags + "'");
    }
}

Dataset load_dataset(const std::string& input, const std::string& columns) {
    std::vector<std::string> names;
    std::stringstream ss(columns);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) names.push_back(item);
    }
    if (names.empty()) throw ConfigError("--columns must name at least one column");
    return align(load_csv(input, names));
}

void print_adf(const AdfResult& r, const std::string& label) {
    std::printf("%-14s t = %9.4f  p = %.4f  (lags %d, n %d, spec %s)\n", label.c_str(),
                r.statistic, r.p_value, r.lags, r.nobs, to_string(r.spec));
}

int cmd_adf(const std::string& input, const std::string& column, const std::string& spec_s,
            const std::string& lags_s, int max_lags, int diff_order) {
    const auto series = load_csv(input, {column});
    TimeSeries ts = series.front();
    if (diff_order > 0) ts = difference(ts, diff_order);
    const AdfResult r = adf_test(ts, parse_spec(spec_s), parse_lags(lags_s, max_lags));
    print_adf(r, ts.name());
    std::printf("critical values: 1%% %.4f, 5%% %.4f, 10%% %.4f\n", r.cv_1pct, r.cv_5pct,
                r.cv_10pct);
    return 0;
}

int cmd_var_select(const std::string& input, const std::string& columns, int max_p,
                   const std::string& basis) {
    Dataset ds = load_dataset(input, columns);
    if (basis == "first_differences") ds = ds.differenced();
    const LagSelectionTable table = select_lag(ds, max_p, true);
    std::printf("%-4s %-12s %-12s %-12s %-10s %-10s %-10s\n", "Lag", "LogL", "LR", "FPE", "AIC",
                "SC", "HQ");
    for (const auto& r : table.rows) {
        std::string lr = r.lr ? std::to_string(*r.lr).substr(0, 8) : "--";
        if (r.lr_marked) lr += "*";
        char fpe[32];
        std::snprintf(fpe, sizeof(fpe), "%.2e%s", r.fpe, r.fpe_min ? "*" : "");
        std::printf("%-4d %-12.2f %-12s %-12s %-.4f%s   %-.4f%s   %-.4f%s\n", r.p, r.loglik,
                    lr.c_str(), fpe, r.aic, r.aic_min ? "*" : " ", r.sc, r.sc_min ? "*" : " ",
                    r.hq, r.hq_min ? "*" : " ");
    }
    std::printf("selected: LR %d, FPE %d, AIC %d, SC %d, HQ %d\n", table.selected_lr,
                table.selected_fpe, table.selected_aic, table.selected_sc, table.selected_hq);
    return 0;
}

int cmd_var_fit(const std::string& input, const std::string& columns, int p,
                const std::string& basis) {
    Dataset ds = load_dataset(input, columns);
    if (basis == "first_differences") ds = ds.differenced();
    const VarFit fit = fit_var(ds, p, true);
    std::printf("VAR(%d) on %s, k = %d, T_eff = %d, logL = %.4f\n", fit.p, basis.c_str(), fit.k,
                fit.t_eff, fit.loglik);
    for (int l = 0; l < fit.p; ++l) {
        std::printf("A%d =\n", l + 1);
        const auto& A = fit.lag_coef[static_cast<std::size_t>(l)];
        for (int i = 0; i < fit.k; ++i) {
            for (int c = 0; c < fit.k; ++c) std::printf(" %10.6f", A(i, c));
            std::printf("\n");
        }
    }
    std::printf("intercept =");
    for (int i = 0; i < fit.k; ++i) std::printf(" %10.6f", fit.intercept_vec(i));
    std::printf("\n\nInverse roots (modulus):\n");
    const StabilityReport rep = stability(fit);
    for (const auto& root : rep.roots) {
        std::printf("  %9.6f %+9.6fi   %.6f\n", root.real(), root.imag(), std::abs(root));
    }
    std::printf("stable: %s\n\nSerial correlation LM:\n", rep.stable ? "yes" : "no");
    for (int h = 1; h <= 12; ++h) {
        const LmResult lm = residual_lm(fit, h);
        std::printf("  lag %2d: LM = %8.4f  df = %d  p = %.4f\n", lm.lag, lm.statistic, lm.df,
                    lm.p_value);
    }
    return 0;
}

int cmd_johansen(const std::string& input, const std::string& columns, int lag,
                 const std::string& case_s) {
    const Dataset ds = load_dataset(input, columns);
    const JohansenResult res = johansen_trace(ds, lag, parse_case(case_s));
    std::printf("Johansen trace test, case %s, VECM lag %d, T_eff = %d\n",
                to_string(res.det_case), res.vecm_lag, res.t_eff);
    std::printf("%-8s %-12s %-12s %-12s %-10s\n", "Rank", "Eigenvalue", "Trace", "5% CV",
                "p-value");
    for (const auto& r : res.rows) {
        std::printf("r<=%-5d %-12.4f %-12.4f %-12.4f %-10.4f\n", r.r, r.eigenvalue, r.trace_stat,
                    r.cv_5pct, r.p_value);
    }
    std::printf("selected rank at 5%%: %d\n", res.selected_rank);
    return 0;
}

int cmd_ty(const std::string& input, const std::string& columns, const std::string& target,
           const std::string& cause, int p, int dmax, const std::string& mode_s) {
    const Dataset ds = load_dataset(input, columns);
    const RestrictionMode mode =
        mode_s == "all_lags" ? RestrictionMode::AllLags : RestrictionMode::FirstP;
    int d = dmax;
    if (d < 0) {
        d = 0;
        for (int jcol = 0; jcol < ds.cols(); ++jcol) {
            const Eigen::VectorXd col = ds.column(jcol);
            const std::vector<double> v(col.data(), col.data() + col.size());
            d = std::max(d, integration_order({v.data(), v.size()}).order);
        }
    }
    const TyResult r =
        toda_yamamoto(ds, ds.index_of(target), ds.index_of(cause), p, d, mode);
    std::printf("%s -> %s: chi-sq = %.4f, df = %d, p = %.4f  (p = %d, d_max = %d, mode %s)\n",
                r.cause.c_str(), r.target.c_str(), r.statistic, r.df, r.p_value, r.p, r.d_max,
                to_string(r.mode));
    return 0;
}

int cmd_mc(const std::string& test, const std::string& dgp_s, int k, int T, int reps,
           double alpha, std::uint64_t seed, double coef, int lag, int p, int dmax, bool serial,
           const std::string& csv_path) {
    DgpSpec dgp;
    if (dgp_s == "random_walk") {
        dgp = DgpSpec::random_walk(k, T, seed);
    } else if (dgp_s == "stationary_var") {
        dgp = DgpSpec::stationary_var({Eigen::MatrixXd::Identity(k, k) * 0.5}, T, seed);
    } else if (dgp_s == "cointegrated") {
        dgp = DgpSpec::cointegrated(Eigen::Vector2d(1.0, -1.0), T, seed);
    } else if (dgp_s == "causal") {
        dgp = DgpSpec::causal(coef, T, seed);
    } else if (dgp_s == "independent") {
        dgp = DgpSpec::independent(T, seed);
    } else {
        throw ConfigError("unknown --dgp '" + dgp_s + "'");
    }

    TestRunner runner;
    if (test == "adf") {
        runner = adf_runner();
    } else if (test == "johansen") {
        runner = johansen_rank0_runner(lag);
    } else if (test == "ty") {
        runner = ty_runner(p, dmax);
    } else {
        throw ConfigError("unknown --test '" + test + "'");
    }

    const SizePowerReport report = rejection_rate(runner, dgp, reps, alpha, !serial);
    std::printf("%s on %s: rate %.4f (%d/%d rejections at alpha %g), mc se %.4f, failures %d\n",
                report.test_id.c_str(), report.dgp_id.c_str(), report.rate, report.rejections,
                report.replications, report.alpha, report.mc_se, report.failures);
    if (!csv_path.empty()) {
        const bool fresh = !std::filesystem::exists(csv_path);
        std::ofstream out(csv_path, std::ios::app);
        if (!out) throw IoError("cannot write '" + csv_path + "'");
        if (fresh) out << SizePowerReport::csv_header() << "\n";
        out << report.csv_row() << "\n";
        std::printf("appended to %s\n", csv_path.c_str());
    }
    return 0;
}

int cmd_pipeline(const std::string& config_path) {
    const PipelineConfig cfg = load_config(config_path);
    const ReportBundle bundle = run_pipeline(cfg);
    emit_report(bundle, cfg.output_dir);
    std::printf("pipeline complete: VAR(%d) on %s, cointegration rank %d, %zu causality tests\n",
                bundle.selected_p, to_string(cfg.var_basis), bundle.johansen.selected_rank,
                bundle.causality.size());
    for (const char* name : {"report.txt", "results.json", "roots.svg", "run_meta.json"}) {
        std::printf("wrote %s/%s\n", cfg.output_dir.c_str(), name);
    }
    return 0;
}

int cmd_demo_data(const std::string& out_dir, std::uint64_t seed, int months) {
    const DemoFiles files = write_demo(out_dir, seed, months);
    std::printf("wrote %s\nwrote %s\nrun: tsecon pipeline --config %s\n", files.csv_path.c_str(),
                files.config_path.c_str(), files.config_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-series econometrics toolkit"};
    app.set_version_flag("--version", tsecon::kVersion);
    app.require_subcommand(1);

    std::string input, column, columns, spec_s = "constant", lags_s = "auto";
    std::string basis = "levels", case_s = "restricted_constant", mode_s = "first_p";
    std::string target, cause, test, dgp_s, csv_path, config_path, out_dir = "demo";
    int max_lags = -1, diff_order = 0, max_p = 8, p = 1, lag = 0, dmax = -1;
    int k = 1, T = 250, reps = 1000, months = 157;
    double alpha = 0.05, coef = 0.5;
    std::uint64_t seed = tsecon::kDemoSeed;
    bool serial = false;

    auto* adf = app.add_subcommand("adf", "augmented Dickey-Fuller unit-root test");
    adf->add_option("--input", input, "CSV file")->required();
    adf->add_option("--column", column, "column to test")->required();
    adf->add_option("--spec", spec_s, "none|constant|constant_trend");
    adf->add_option("--lags", lags_s, "'auto' or a fixed lag count");
    adf->add_option("--max-lags", max_lags, "cap for automatic selection");
    adf->add_option("--diff", diff_order, "difference the series first");

    auto* vsel = app.add_subcommand("var-select", "VAR lag order selection table");
    vsel->add_option("--input", input)->required();
    vsel->add_option("--columns", columns, "comma-separated column list")->required();
    vsel->add_option("--max-p", max_p);
    vsel->add_option("--basis", basis, "levels|first_differences");

    auto* vfit = app.add_subcommand("var-fit", "fit a VAR and report stability/LM diagnostics");
    vfit->add_option("--input", input)->required();
    vfit->add_option("--columns", columns)->required();
    vfit->add_option("--p", p, "lag order")->required();
    vfit->add_option("--basis", basis);

    auto* joh = app.add_subcommand("johansen", "Johansen trace cointegration test");
    joh->add_option("--input", input)->required();
    joh->add_option("--columns", columns)->required();
    joh->add_option("--lag", lag, "VECM lagged differences");
    joh->add_option("--case", case_s,
                    "no_deterministic|restricted_constant|unrestricted_constant");

    auto* ty = app.add_subcommand("ty", "Toda-Yamamoto causality test");
    ty->add_option("--input", input)->required();
    ty->add_option("--columns", columns)->required();
    ty->add_option("--target", target)->required();
    ty->add_option("--cause", cause)->required();
    ty->add_option("--p", p, "tested lag count");
    ty->add_option("--dmax", dmax, "augmentation lags (-1: derive)");
    ty->add_option("--mode", mode_s, "first_p|all_lags");

    auto* mc = app.add_subcommand("mc", "Monte Carlo size/power measurement");
    mc->add_option("--test", test, "adf|johansen|ty")->required();
    mc->add_option("--dgp", dgp_s,
                   "random_walk|stationary_var|cointegrated|causal|independent")
        ->required();
    mc->add_option("--k", k, "variables (random_walk/stationary_var)");
    mc->add_option("--t", T, "sample length");
    mc->add_option("--reps", reps, "replications");
    mc->add_option("--alpha", alpha);
    mc->add_option("--seed", seed);
    mc->add_option("--coef", coef, "causal coefficient");
    mc->add_option("--lag", lag, "Johansen VECM lag");
    mc->add_option("--p", p, "TY tested lags");
    mc->add_option("--dmax", dmax, "TY augmentation (negative means 1)");
    mc->add_flag("--serial", serial, "run the serial reference path");
    mc->add_option("--csv", csv_path, "append the report to this CSV");

    auto* pipe = app.add_subcommand("pipeline", "run the full pipeline from a config file");
    pipe->add_option("--config", config_path, "pipeline config file")->required();

    auto* demo = app.add_subcommand("demo-data", "write the synthetic demo dataset and config");
    demo->add_option("--out", out_dir, "output directory");
    demo->add_option("--seed", seed);
    demo->add_option("--months", months);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*adf) return cmd_adf(input, column, spec_s, lags_s, max_lags, diff_order);
        if (*vsel) return cmd_var_select(input, columns, max_p, basis);
        if (*vfit) return cmd_var_fit(input, columns, p, basis);
        if (*joh) return cmd_johansen(input, columns, lag, case_s);
        if (*ty) return cmd_ty(input, columns, target, cause, p, dmax, mode_s);
        if (*mc)
            return cmd_mc(test, dgp_s, k, T, reps, alpha, seed, coef, lag, p,
                          dmax < 0 ? 1 : dmax, serial, csv_path);
        if (*pipe) return cmd_pipeline(config_path);
        if (*demo) return cmd_demo_data(out_dir, seed, months);
    } catch (const tsecon::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        switch (e.kind()) {
            case tsecon::ErrorKind::Config: return 2;
            case tsecon::ErrorKind::Data: return 3;
            case tsecon::ErrorKind::Numeric: return 4;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
    return 0;
}
