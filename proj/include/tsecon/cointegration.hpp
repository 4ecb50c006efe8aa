#pragma once

#include <vector>

#include "tsecon/numstat.hpp"
#include "tsecon/series.hpp"

namespace tsecon {

// Deterministic cases for the Johansen test. RestrictedConstant puts the
// constant inside the cointegrating relation (no drift in the VAR);
// UnrestrictedConstant leaves it in the short-run regression. Trend cases
// are not supported.
enum class JohansenCase { NoDeterministic, RestrictedConstant, UnrestrictedConstant };

const char* to_string(JohansenCase c);

struct JohansenRankRow {
    int r = 0;                // hypothesized rank
    double eigenvalue = 0.0;  // lambda_{r+1}
    double trace_stat = 0.0;
    double cv_5pct = 0.0;
    double p_value = 1.0;
    double max_eig_stat = 0.0;  // informational; no embedded critical values
};

struct JohansenResult {
    JohansenCase det_case = JohansenCase::RestrictedConstant;
    int vecm_lag = 0;
    int k = 0;
    int t_eff = 0;
    std::vector<double> eigenvalues;    // k largest, descending, in [0,1)
    std::vector<JohansenRankRow> rows;  // r = 0..k-1
    int selected_rank = 0;              // smallest r with trace below the 5% value
    Eigen::MatrixXd beta;               // eigenvectors of the reduced problem, v'S11v = 1
};

// Johansen reduced-rank regression with `vecm_lag` lagged differences: the
// trace statistic for rank <= r is -T sum_{i>r} ln(1 - lambda_i).
JohansenResult johansen_trace(const Dataset& ds, int vecm_lag, JohansenCase det_case);

// Embedded 5% asymptotic critical value of the trace statistic,
// k_minus_r in 1..12.
double trace_critical_value(int k_minus_r, JohansenCase det_case);

// Upper-tail probability of the asymptotic trace distribution via a
// two-moment gamma approximation with embedded moments.
double trace_pvalue(double trace_stat, int k_minus_r, JohansenCase det_case);

}  // namespace tsecon
