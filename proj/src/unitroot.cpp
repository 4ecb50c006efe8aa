#include "tsecon/unitroot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tsecon/numstat.hpp"

namespace tsecon {

namespace {

// Probability grid of the embedded Dickey-Fuller quantile tables and its
// standard-normal quantiles (for probit-space interpolation).
constexpr double kGridProb[11] = {0.01, 0.025, 0.05, 0.10, 0.25, 0.50,
                                  0.75, 0.90, 0.95, 0.975, 0.99};
constexpr double kGridProbit[11] = {-2.3263478740, -1.9599639845, -1.6448536270,
                                    -1.2815515655, -0.6744897502, 0.0,
                                    0.6744897502,  1.2815515655,  1.6448536270,
                                    1.9599639845,  2.3263478740};

// Asymptotic quantiles of the Dickey-Fuller t distribution per deterministic
// case, simulated from the defining Brownian functional by
// tools/make_dist_tables (1,000-step walks, 2,000,000 replications per case);
// the 1/5/10% columns agree with the published Fuller / MacKinnon values.
constexpr double kDfQuantiles[3][11] = {
    { // none
     -2.5699, -2.2307, -1.9426, -1.6182, -1.0920, -0.4996, 0.2197, 0.8860, 1.2805, 1.6190, 2.0125},
    { // constant
     -3.4332, -3.1239, -2.8625, -2.5678, -2.0872, -1.5656, -1.0161, -0.4396, -0.0756, 0.2416, 0.6095},
    { // constant + trend
     -3.9688, -3.6664, -3.4134, -3.1281, -2.6679, -2.1794, -1.7017, -1.2454, -0.9378, -0.6558, -0.3210},
};

constexpr double kPClampLo = 0.0001;
constexpr double kPClampHi = 0.9999;

double normal_cdf(double z) { return 0.5 * std::erfc(-z / 1.4142135623730951); }

int spec_index(Deterministic spec) { return static_cast<int>(spec); }
int det_count(Deterministic spec) { return spec_index(spec); }  // 0, 1, 2

struct Regression {
    double tstat = 0.0;
    double sc = 0.0;  // Schwarz criterion, (-2 logL + m ln T) / T
    int nobs = 0;
    int m = 0;
};

// Test regression using rows t = t0 .. n-1 (0-based), q lagged differences.
// Regressor order: [constant?, trend?, y_{t-1}, dy_{t-1} .. dy_{t-q}].
Regression run_adf_regression(std::span<const double> v, Deterministic spec, int q, int t0) {
    const int n = static_cast<int>(v.size());
    const int nd = det_count(spec);
    const int m = nd + 1 + q;
    const int rows = n - t0;
    if (rows < m + 5) {
        throw LengthError("adf_test: effective sample too small (" + std::to_string(rows) +
                          " rows for " + std::to_string(m) + " regressors)");
    }
    Eigen::VectorXd y(rows);
    Eigen::MatrixXd X(rows, m);
    for (int t = t0; t < n; ++t) {
        const int r = t - t0;
        y(r) = v[t] - v[t - 1];
        int c = 0;
        if (nd >= 1) X(r, c++) = 1.0;
        if (nd >= 2) X(r, c++) = static_cast<double>(t);
        X(r, c++) = v[t - 1];
        for (int l = 1; l <= q; ++l) X(r, c++) = v[t - l] - v[t - l - 1];
    }
    const OlsFit fit = ols(y, X);
    Regression out;
    out.tstat = fit.t_ratio(nd);
    out.nobs = rows;
    out.m = m;
    const double ssr = fit.residuals.squaredNorm();
    const double ll = -0.5 * rows * (1.0 + 1.8378770664093453 + std::log(ssr / rows));
    out.sc = (-2.0 * ll + m * std::log(static_cast<double>(rows))) / rows;
    return out;
}

int schwert_rule(int n) {
    return static_cast<int>(std::floor(12.0 * std::pow(n / 100.0, 0.25)));
}

}  // namespace

const char* to_string(Deterministic spec) {
    switch (spec) {
        case Deterministic::None: return "none";
        case Deterministic::Constant: return "constant";
        case Deterministic::ConstantAndTrend: return "constant_and_trend";
    }
    return "?";
}

double df_pvalue(double t, Deterministic spec) {
    const double* q = kDfQuantiles[spec_index(spec)];
    // locate segment; extrapolate with the end segments outside the grid
    int i = 0;
    while (i < 9 && t > q[i + 1]) ++i;
    const double slope = (kGridProbit[i + 1] - kGridProbit[i]) / (q[i + 1] - q[i]);
    const double z = kGridProbit[i] + slope * (t - q[i]);
    return std::clamp(normal_cdf(z), kPClampLo, kPClampHi);
}

AdfResult adf_test(std::span<const double> v, Deterministic spec, LagPolicy policy) {
    const int n = static_cast<int>(v.size());
    if (n < 8) throw LengthError("adf_test: series too short");
    double dmax = 0.0;
    for (int t = 1; t < n; ++t) dmax = std::max(dmax, std::abs(v[t] - v[t - 1]));
    if (dmax == 0.0) throw DegenerateSeriesError("adf_test: first difference is identically zero");

    int q = 0;
    if (policy.mode == LagPolicy::Mode::Fixed) {
        q = policy.lags;
        if (q < 0) throw DomainError("adf_test: negative lag count");
    } else {
        int max_q = policy.max_lags >= 0 ? policy.max_lags : schwert_rule(n);
        // shrink until the common estimation sample can fit the largest model
        while (max_q > 0 && (n - (max_q + 1)) < det_count(spec) + 1 + max_q + 5) --max_q;
        const int t0 = max_q + 1;
        double best = std::numeric_limits<double>::infinity();
        for (int cand = 0; cand <= max_q; ++cand) {
            const double sc = run_adf_regression(v, spec, cand, t0).sc;
            if (sc < best) {
                best = sc;
                q = cand;
            }
        }
    }

    const Regression reg = run_adf_regression(v, spec, q, q + 1);
    AdfResult res;
    res.spec = spec;
    res.lags = q;
    res.statistic = reg.tstat;
    res.p_value = df_pvalue(reg.tstat, spec);
    const double* tab = kDfQuantiles[spec_index(spec)];
    res.cv_1pct = tab[0];
    res.cv_5pct = tab[2];
    res.cv_10pct = tab[3];
    res.nobs = reg.nobs;
    return res;
}

AdfResult adf_test(const TimeSeries& ts, Deterministic spec, LagPolicy policy) {
    return adf_test(std::span<const double>(ts.values()), spec, policy);
}

IntegrationOrder integration_order(std::span<const double> values, int max_d, double alpha,
                                   Deterministic spec, LagPolicy policy) {
    if (max_d < 0) throw DomainError("integration_order: max_d must be >= 0");
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("integration_order: alpha in (0,1)");
    std::vector<double> cur(values.begin(), values.end());
    for (int d = 0; d <= max_d; ++d) {
        if (adf_test(std::span<const double>(cur), spec, policy).p_value < alpha) {
            return {d, false};
        }
        if (d < max_d) {
            for (std::size_t i = 0; i + 1 < cur.size(); ++i) cur[i] = cur[i + 1] - cur[i];
            cur.pop_back();
        }
    }
    return {max_d, true};
}

IntegrationOrder integration_order(const TimeSeries& ts, int max_d, double alpha,
                                   Deterministic spec, LagPolicy policy) {
    return integration_order(std::span<const double>(ts.values()), max_d, alpha, spec, policy);
}

}  // namespace tsecon
