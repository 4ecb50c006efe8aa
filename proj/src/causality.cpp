#include "tsecon/causality.hpp"

namespace tsecon {

const char* to_string(RestrictionMode mode) {
    return mode == RestrictionMode::FirstP ? "first_p" : "all_lags";
}

WaldResult wald_linear_restriction(const VarFit& fit, int equation,
                                   const std::vector<int>& coef_indices) {
    if (equation < 0 || equation >= fit.k) {
        throw IndexError("wald_linear_restriction: equation index out of range");
    }
    if (coef_indices.empty()) {
        throw IndexError("wald_linear_restriction: empty restriction set");
    }
    for (int idx : coef_indices) {
        if (idx < 0 || idx >= fit.m) {
            throw IndexError("wald_linear_restriction: coefficient index " +
                             std::to_string(idx) + " out of range");
        }
    }
    const int r = static_cast<int>(coef_indices.size());
    const double s2 =
        fit.resid.col(equation).squaredNorm() / static_cast<double>(fit.t_eff - fit.m);

    Eigen::VectorXd b(r);
    Eigen::MatrixXd v(r, r);
    for (int i = 0; i < r; ++i) {
        b(i) = fit.coef_raw(coef_indices[static_cast<std::size_t>(i)], equation);
        for (int j = 0; j < r; ++j) {
            v(i, j) = s2 * fit.xtx_inv(coef_indices[static_cast<std::size_t>(i)],
                                       coef_indices[static_cast<std::size_t>(j)]);
        }
    }
    Eigen::LLT<Eigen::MatrixXd> llt(v);
    if (llt.info() != Eigen::Success) {
        throw SingularCovarianceError("wald_linear_restriction: restricted covariance block "
                                      "is singular");
    }
    WaldResult res;
    res.statistic = b.dot(llt.solve(b));
    res.df = r;
    return res;
}

TyResult toda_yamamoto(const Dataset& ds, int target, int cause, int p, int d_max,
                       RestrictionMode mode) {
    const int k = ds.cols();
    if (target < 0 || target >= k) throw IndexError("toda_yamamoto: target index out of range");
    if (cause < 0 || cause >= k) throw IndexError("toda_yamamoto: cause index out of range");
    if (target == cause) throw IndexError("toda_yamamoto: target and cause must differ");
    if (p < 1) throw DomainError("toda_yamamoto: tested lag count must be >= 1");
    if (d_max < 0) throw DomainError("toda_yamamoto: d_max must be >= 0");

    const VarFit fit = fit_var(ds, p + d_max, /*intercept=*/true);
    const int tested = mode == RestrictionMode::FirstP ? p : p + d_max;
    std::vector<int> indices;
    indices.reserve(static_cast<std::size_t>(tested));
    for (int l = 1; l <= tested; ++l) indices.push_back(fit.regressor_index(l, cause));

    const WaldResult wald = wald_linear_restriction(fit, target, indices);
    TyResult res;
    res.target = ds.name(target);
    res.cause = ds.name(cause);
    res.p = p;
    res.d_max = d_max;
    res.mode = mode;
    res.statistic = wald.statistic;
    res.df = wald.df;
    res.p_value = chi_square_survival(wald.statistic, wald.df);
    return res;
}

}  // namespace tsecon
