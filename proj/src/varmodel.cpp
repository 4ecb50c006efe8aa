#include "tsecon/varmodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tsecon {

namespace {

constexpr double kLn2Pi = 1.8378770664093453;

// Common-sample design: rows are observations t = t0 .. T-1 of `obs`,
// regressors are lags 1..p (variable-major within a lag) plus intercept.
void build_design(const Eigen::MatrixXd& obs, int p, bool intercept, int t0, Eigen::MatrixXd& Y,
                  Eigen::MatrixXd& X) {
    const int T = static_cast<int>(obs.rows());
    const int k = static_cast<int>(obs.cols());
    const int rows = T - t0;
    const int m = k * p + (intercept ? 1 : 0);
    Y = obs.bottomRows(rows);
    X.resize(rows, m);
    for (int l = 1; l <= p; ++l) {
        X.block(0, (l - 1) * k, rows, k) = obs.block(t0 - l, 0, rows, k);
    }
    if (intercept) X.col(m - 1).setOnes();
}

double recovered_log_det(double loglik, int T, int k) {
    return -2.0 * loglik / T - k * (1.0 + kLn2Pi);
}

}  // namespace

VarFit fit_var(const Dataset& ds, int p, bool intercept) {
    if (p < 0) throw DomainError("fit_var: negative lag order");
    const int T = ds.rows();
    const int k = ds.cols();
    const int m = k * p + (intercept ? 1 : 0);
    if (T - p <= m + 5) {
        throw LengthError("fit_var: sample of " + std::to_string(T) +
                          " too short for VAR(" + std::to_string(p) + ") with " +
                          std::to_string(k) + " variables");
    }
    Eigen::MatrixXd Y, X;
    build_design(ds.observations(), p, intercept, p, Y, X);
    const MultiOlsFit mfit = multivar_ols(Y, X);

    VarFit fit;
    fit.k = k;
    fit.p = p;
    fit.intercept = intercept;
    fit.names = ds.names();
    fit.t_eff = static_cast<int>(Y.rows());
    fit.m = m;
    fit.lag_coef.reserve(static_cast<std::size_t>(p));
    for (int l = 1; l <= p; ++l) {
        // rows (l-1)k..lk-1 of B' : A_l(i,j) = B((l-1)k + j, i)
        fit.lag_coef.push_back(mfit.coef.block((l - 1) * k, 0, k, k).transpose());
    }
    fit.intercept_vec = intercept ? Eigen::VectorXd(mfit.coef.row(m - 1).transpose())
                                  : Eigen::VectorXd(Eigen::VectorXd::Zero(k));
    fit.resid = mfit.resid;
    fit.sigma = mfit.sigma;
    fit.loglik = mfit.loglik;
    fit.design = std::move(X);
    fit.coef_raw = mfit.coef;
    fit.xtx_inv = mfit.xtx_inv;
    return fit;
}

LagSelectionRow criteria_row(double loglik, std::optional<double> prev_loglik, int T, int k,
                             int p, bool intercept) {
    const int det = intercept ? 1 : 0;
    const int m = k * p + det;
    if (T <= m) throw DomainError("criteria_row: T must exceed the per-equation regressor count");
    const int n_par = k * (det + p * k);
    const double lt = std::log(static_cast<double>(T));
    const double llt = std::log(lt);

    LagSelectionRow row;
    row.p = p;
    row.loglik = loglik;
    row.aic = (-2.0 * loglik + 2.0 * n_par) / T;
    row.sc = (-2.0 * loglik + n_par * lt) / T;
    row.hq = (-2.0 * loglik + 2.0 * n_par * llt) / T;
    const double ld = recovered_log_det(loglik, T, k);
    row.fpe = std::pow(static_cast<double>(T + m) / (T - m), k) * std::exp(ld);
    if (prev_loglik) {
        const double ld_prev = recovered_log_det(*prev_loglik, T, k);
        row.lr = (T - m) * (ld_prev - ld);
    }
    return row;
}

LagSelectionTable selection_table(const std::vector<double>& logliks, int T, int k,
                                  bool intercept, double lr_alpha) {
    if (logliks.empty()) throw LengthError("selection_table: no log-likelihoods");
    LagSelectionTable table;
    table.t_common = T;
    table.k = k;
    table.rows.reserve(logliks.size());
    for (std::size_t p = 0; p < logliks.size(); ++p) {
        std::optional<double> prev;
        if (p > 0) prev = logliks[p - 1];
        table.rows.push_back(
            criteria_row(logliks[p], prev, T, k, static_cast<int>(p), intercept));
    }

    auto argmin = [&](auto proj) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < table.rows.size(); ++i) {
            if (proj(table.rows[i]) < proj(table.rows[best])) best = i;  // ties keep smaller p
        }
        return static_cast<int>(best);
    };
    table.selected_fpe = argmin([](const LagSelectionRow& r) { return r.fpe; });
    table.selected_aic = argmin([](const LagSelectionRow& r) { return r.aic; });
    table.selected_sc = argmin([](const LagSelectionRow& r) { return r.sc; });
    table.selected_hq = argmin([](const LagSelectionRow& r) { return r.hq; });
    table.rows[static_cast<std::size_t>(table.selected_fpe)].fpe_min = true;
    table.rows[static_cast<std::size_t>(table.selected_aic)].aic_min = true;
    table.rows[static_cast<std::size_t>(table.selected_sc)].sc_min = true;
    table.rows[static_cast<std::size_t>(table.selected_hq)].hq_min = true;

    const double crit = chi_square_critical(lr_alpha, k * k);
    table.selected_lr = 0;
    for (std::size_t i = table.rows.size(); i-- > 1;) {
        if (table.rows[i].lr && *table.rows[i].lr > crit) {
            table.rows[i].lr_marked = true;
            table.selected_lr = static_cast<int>(i);
            break;
        }
    }
    return table;
}

LagSelectionTable select_lag(const Dataset& ds, int max_p, bool intercept) {
    if (max_p < 0) throw DomainError("select_lag: negative max_p");
    const int T = ds.rows();
    const int k = ds.cols();
    const int t_common = T - max_p;
    const int m_max = k * max_p + (intercept ? 1 : 0);
    if (t_common <= m_max + 5) {
        throw LengthError("select_lag: sample too short for max_p = " + std::to_string(max_p));
    }
    std::vector<double> logliks;
    logliks.reserve(static_cast<std::size_t>(max_p) + 1);
    for (int p = 0; p <= max_p; ++p) {
        Eigen::MatrixXd Y, X;
        build_design(ds.observations(), p, intercept, max_p, Y, X);
        try {
            logliks.push_back(multivar_ols(Y, X).loglik);
        } catch (const RankDeficientError&) {
            // collinear candidate (over-parameterized for the data): rank it last
            logliks.push_back(-std::numeric_limits<double>::infinity());
        }
    }
    return selection_table(logliks, t_common, k, intercept);
}

Eigen::MatrixXd companion_matrix(const VarFit& fit) {
    if (fit.p < 1) throw DomainError("companion_matrix: VAR order must be >= 1");
    const int k = fit.k, p = fit.p;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(k * p, k * p);
    for (int l = 0; l < p; ++l) {
        C.block(0, l * k, k, k) = fit.lag_coef[static_cast<std::size_t>(l)];
    }
    if (p > 1) {
        C.block(k, 0, k * (p - 1), k * (p - 1)).setIdentity();
    }
    return C;
}

StabilityReport stability(const VarFit& fit) {
    StabilityReport report;
    auto roots = eigenvalues(companion_matrix(fit));
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    report.roots = std::move(roots);
    report.moduli.reserve(report.roots.size());
    for (const auto& r : report.roots) report.moduli.push_back(std::abs(r));
    report.stable = !report.moduli.empty() && report.moduli.front() < 1.0 - 1e-9;
    return report;
}

LmResult residual_lm(const VarFit& fit, int h) {
    if (h < 1) throw DomainError("residual_lm: lag must be >= 1");
    const int T = fit.t_eff;
    const int k = fit.k;
    if (T <= fit.m + k) throw LengthError("residual_lm: too few observations");

    Eigen::MatrixXd aux(T, fit.m + k);
    aux.leftCols(fit.m) = fit.design;
    aux.rightCols(k).setZero();
    if (h < T) {
        aux.block(h, fit.m, T - h, k) = fit.resid.topRows(T - h);
    }
    const MultiOlsFit afit = multivar_ols(fit.resid, aux);

    Eigen::LLT<Eigen::MatrixXd> llt(fit.sigma);
    if (llt.info() != Eigen::Success) {
        throw NotPositiveDefiniteError("residual_lm: residual covariance not positive definite");
    }
    const double tr = llt.solve(afit.sigma).trace();
    LmResult res;
    res.lag = h;
    res.statistic = T * (k - tr);
    res.df = k * k;
    res.p_value = chi_square_survival(std::max(res.statistic, 0.0), res.df);
    res.statistic = std::max(res.statistic, 0.0);
    return res;
}

}  // namespace tsecon
