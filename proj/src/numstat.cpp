#include "tsecon/numstat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tsecon {

namespace {

constexpr double kRankTol = 1e-10;
constexpr double kLn2Pi = 1.8378770664093453;

// Shared QR factorization state for the OLS kernels.
struct QrState {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
    Eigen::MatrixXd xtx_inv;
};

QrState factor_checked(const Eigen::MatrixXd& X) {
    const auto m = X.cols();
    QrState st{Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(X), {}};
    const Eigen::MatrixXd R = st.qr.matrixR().topLeftCorner(m, m);
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
        const double d = std::abs(R(i, i));
        dmax = std::max(dmax, d);
        dmin = std::min(dmin, d);
    }
    if (!(dmax > 0.0) || dmin < kRankTol * dmax) {
        throw RankDeficientError("regressor matrix is rank deficient (pivot ratio " +
                                 std::to_string(dmax > 0 ? dmin / dmax : 0.0) + ")");
    }
    // X P = Q R  =>  (X'X)^{-1} = P (R'R)^{-1} P'
    Eigen::MatrixXd r_inv =
        R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(m, m));
    Eigen::MatrixXd rtr_inv = r_inv * r_inv.transpose();
    const auto& perm = st.qr.colsPermutation();
    st.xtx_inv = perm * rtr_inv * perm.transpose();
    return st;
}

double chol_log_det(const Eigen::MatrixXd& S, const char* who) {
    if (S.rows() != S.cols()) throw ShapeError(std::string(who) + ": matrix is not square");
    Eigen::LLT<Eigen::MatrixXd> llt(S);
    if (llt.info() != Eigen::Success) {
        throw NotPositiveDefiniteError(std::string(who) + ": matrix is not positive definite");
    }
    const Eigen::MatrixXd L = llt.matrixL();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < L.rows(); ++i) {
        if (!(L(i, i) > 0.0)) {
            throw NotPositiveDefiniteError(std::string(who) + ": matrix is not positive definite");
        }
        acc += std::log(L(i, i));
    }
    return 2.0 * acc;
}

// ln Gamma(a), Lanczos approximation (Numerical Recipes coefficients).
double gammln(double xx) {
    static const double cof[6] = {76.18009172947146,  -86.50532032941677, 24.01409824083091,
                                  -1.231739572450155, 0.1208650973866179e-2,
                                  -0.5395239384953e-5};
    double x = xx, y = xx;
    double tmp = x + 5.5;
    tmp -= (x + 0.5) * std::log(tmp);
    double ser = 1.000000000190015;
    for (int j = 0; j < 6; ++j) ser += cof[j] / ++y;
    return -tmp + std::log(2.5066282746310005 * ser / x);
}

// Series expansion for P(a,x), valid for x < a+1.
double gamma_series(double a, double x) {
    const double gln = gammln(a);
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ++ap;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * std::numeric_limits<double>::epsilon()) {
            return sum * std::exp(-x + a * std::log(x) - gln);
        }
    }
    throw ConvergenceError("incomplete gamma series failed to converge");
}

// Continued fraction for Q(a,x), valid for x >= a+1.
double gamma_contfrac(double a, double x) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double fpmin = std::numeric_limits<double>::min() / eps;
    const double gln = gammln(a);
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= eps) {
            return std::exp(-x + a * std::log(x) - gln) * h;
        }
    }
    throw ConvergenceError("incomplete gamma continued fraction failed to converge");
}

}  // namespace

OlsFit ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X) {
    if (y.size() != X.rows()) {
        throw ShapeError("ols: y has " + std::to_string(y.size()) + " rows, X has " +
                         std::to_string(X.rows()));
    }
    const int n = static_cast<int>(X.rows());
    const int m = static_cast<int>(X.cols());
    if (m < 1) throw ShapeError("ols: X has no columns");
    if (n <= m) throw LengthError("ols: need more observations than regressors");

    QrState st = factor_checked(X);
    OlsFit fit;
    fit.coef = st.qr.solve(y);
    fit.residuals = y - X * fit.coef;
    fit.n = n;
    fit.m = m;
    fit.sigma2 = fit.residuals.squaredNorm() / (n - m);
    fit.xtx_inv = std::move(st.xtx_inv);
    fit.std_err = (fit.sigma2 * fit.xtx_inv.diagonal().array()).sqrt();
    fit.t_ratio = fit.coef.array() / fit.std_err.array();
    return fit;
}

MultiOlsFit multivar_ols(const Eigen::MatrixXd& Y, const Eigen::MatrixXd& X) {
    const int n = static_cast<int>(Y.rows());
    const int k = static_cast<int>(Y.cols());
    const int m = static_cast<int>(X.cols());
    if (X.rows() != 0 && X.rows() != Y.rows()) {
        throw ShapeError("multivar_ols: X and Y row counts differ");
    }
    if (n <= m) throw LengthError("multivar_ols: need more observations than regressors");

    MultiOlsFit fit;
    fit.n = n;
    fit.m = m;
    if (m == 0) {
        fit.coef = Eigen::MatrixXd::Zero(0, k);
        fit.resid = Y;
        fit.xtx_inv = Eigen::MatrixXd::Zero(0, 0);
    } else {
        QrState st = factor_checked(X);
        fit.coef = st.qr.solve(Y);
        fit.resid = Y - X * fit.coef;
        fit.xtx_inv = std::move(st.xtx_inv);
    }
    fit.sigma = fit.resid.transpose() * fit.resid / static_cast<double>(n);
    try {
        fit.loglik = gaussian_loglik(n, k, fit.sigma);
    } catch (const NotPositiveDefiniteError&) {
        // exact fit: the likelihood is unbounded
        fit.loglik = std::numeric_limits<double>::infinity();
    }
    return fit;
}

double gaussian_loglik(int T, int k, const Eigen::MatrixXd& sigma) {
    if (T < 1 || k < 1) throw DomainError("gaussian_loglik: T and k must be positive");
    const double ld = chol_log_det(sigma, "gaussian_loglik");
    return -0.5 * T * k * (1.0 + kLn2Pi) - 0.5 * T * ld;
}

double log_det_psd(const Eigen::MatrixXd& S) { return chol_log_det(S, "log_det_psd"); }

double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw DomainError("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? gamma_series(a, x) : 1.0 - gamma_contfrac(a, x);
}

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw DomainError("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? 1.0 - gamma_series(a, x) : gamma_contfrac(a, x);
}

double chi_square_survival(double x, int df) {
    if (x < 0.0) throw DomainError("chi_square_survival: x must be >= 0");
    if (df < 1) throw DomainError("chi_square_survival: df must be >= 1");
    return gamma_q(0.5 * df, 0.5 * x);
}

double chi_square_critical(double alpha, int df) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("chi_square_critical: alpha in (0,1)");
    double lo = 0.0, hi = 1.0;
    while (chi_square_survival(hi, df) > alpha) {
        hi *= 2.0;
        if (hi > 1e12) throw ConvergenceError("chi_square_critical: bracket failed");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (chi_square_survival(mid, df) > alpha) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& A) {
    if (A.rows() != A.cols()) throw ShapeError("eigenvalues: matrix is not square");
    if (!A.allFinite()) throw DomainError("eigenvalues: non-finite entries");
    Eigen::EigenSolver<Eigen::MatrixXd> solver(A, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("eigenvalues: QR iteration did not converge");
    }
    const auto& ev = solver.eigenvalues();
    std::vector<std::complex<double>> out(static_cast<std::size_t>(ev.size()));
    for (Eigen::Index i = 0; i < ev.size(); ++i) out[static_cast<std::size_t>(i)] = ev(i);
    return out;
}

SymEig gen_eig_sym(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows()) {
        throw ShapeError("gen_eig_sym: A and B must be square and of equal size");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(B);
    if (llt.info() != Eigen::Success) {
        throw NotPositiveDefiniteError("gen_eig_sym: B is not positive definite");
    }
    const Eigen::MatrixXd L = llt.matrixL();
    // C = L^{-1} A L^{-T}, symmetrized against roundoff.
    Eigen::MatrixXd C = L.triangularView<Eigen::Lower>().solve(A);
    C = L.triangularView<Eigen::Lower>().solve(C.transpose().eval());
    C = 0.5 * (C + C.transpose().eval());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(C);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("gen_eig_sym: eigensolver did not converge");
    }
    const int n = static_cast<int>(A.rows());
    // Back-transform and reverse into descending order; u'u = 1 gives v'Bv = 1.
    Eigen::MatrixXd U = L.transpose().triangularView<Eigen::Upper>().solve(solver.eigenvectors());
    SymEig out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (int i = 0; i < n; ++i) {
        out.values(i) = solver.eigenvalues()(n - 1 - i);
        out.vectors.col(i) = U.col(n - 1 - i);
    }
    return out;
}

}  // namespace tsecon
