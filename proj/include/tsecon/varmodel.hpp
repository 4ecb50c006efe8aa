#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "tsecon/numstat.hpp"
#include "tsecon/series.hpp"

namespace tsecon {

// Estimated VAR(p). Design-matrix regressor order is lag blocks first
// (variable-major within a lag: lag 1 vars 1..k, lag 2 vars 1..k, ...) with
// the intercept last; regressor_index maps (lag, variable) to a column.
struct VarFit {
    int k = 0;
    int p = 0;
    bool intercept = true;
    std::vector<Eigen::MatrixXd> lag_coef;  // A_1..A_p, each k x k; A_l(i,j): eq i, var j
    Eigen::VectorXd intercept_vec;          // zero when intercept == false
    Eigen::MatrixXd resid;                  // T_eff x k
    Eigen::MatrixXd sigma;                  // k x k, MLE (E'E / T_eff)
    double loglik = 0.0;
    int t_eff = 0;
    int m = 0;                              // regressors per equation
    Eigen::MatrixXd design;                 // T_eff x m
    Eigen::MatrixXd coef_raw;               // m x k, column per equation
    Eigen::MatrixXd xtx_inv;                // (X'X)^{-1}
    std::vector<std::string> names;

    int regressor_index(int lag, int var) const { return (lag - 1) * k + var; }
};

VarFit fit_var(const Dataset& ds, int p, bool intercept = true);

struct LagSelectionRow {
    int p = 0;
    double loglik = 0.0;
    std::optional<double> lr;  // absent at p = 0
    double fpe = 0.0;
    double aic = 0.0;
    double sc = 0.0;
    double hq = 0.0;
    bool lr_marked = false;
    bool fpe_min = false;
    bool aic_min = false;
    bool sc_min = false;
    bool hq_min = false;
};

struct LagSelectionTable {
    std::vector<LagSelectionRow> rows;
    int t_common = 0;
    int k = 0;
    int selected_lr = 0;
    int selected_fpe = 0;
    int selected_aic = 0;
    int selected_sc = 0;
    int selected_hq = 0;
};

// One table row from log-likelihoods on a fixed sample of length T:
//   AIC = (-2 logL + 2n)/T, SC = (-2 logL + n ln T)/T, HQ = (-2 logL + 2n ln ln T)/T
// with n = k(det + p k) parameters, det = 1 with intercept. ln|Sigma| is
// recovered from logL; FPE = ((T + m)/(T - m))^k |Sigma| and the sequential
// LR uses the small-sample scale (T - m) with m = k p + det regressors per
// equation of the larger model.
LagSelectionRow criteria_row(double loglik, std::optional<double> prev_loglik, int T, int k,
                             int p, bool intercept = true);

// Rows and minimizer flags from precomputed log-likelihoods for p = 0..max.
// The LR mark goes to the largest p whose sequential LR exceeds the 5%
// chi-square critical value with k^2 degrees of freedom; criterion ties break
// toward the smaller order.
LagSelectionTable selection_table(const std::vector<double>& logliks, int T, int k,
                                  bool intercept = true, double lr_alpha = 0.05);

// Fits every order 0..max_p on the common sample of length T - max_p and
// tabulates the criteria.
LagSelectionTable select_lag(const Dataset& ds, int max_p, bool intercept = true);

// Block companion form; eigenvalues are the inverse roots of the AR
// characteristic polynomial.
Eigen::MatrixXd companion_matrix(const VarFit& fit);

struct StabilityReport {
    std::vector<std::complex<double>> roots;  // descending modulus
    std::vector<double> moduli;
    bool stable = false;  // max modulus < 1 - 1e-9
};

StabilityReport stability(const VarFit& fit);

struct LmResult {
    int lag = 0;
    double statistic = 0.0;
    int df = 0;  // k^2
    double p_value = 1.0;
};

// Breusch-Godfrey style serial-correlation LM test at lag h: auxiliary
// regression of the residuals on the original regressors plus u_{t-h}
// (zero-filled pre-sample), LM = T (k - tr(Sigma_u^{-1} Sigma_aux)).
LmResult residual_lm(const VarFit& fit, int h);

}  // namespace tsecon
