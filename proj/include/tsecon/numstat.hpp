#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "tsecon/errors.hpp"

namespace tsecon {

// Single-equation least squares fit.
struct OlsFit {
    Eigen::VectorXd coef;
    Eigen::VectorXd residuals;
    Eigen::VectorXd std_err;
    Eigen::VectorXd t_ratio;
    double sigma2 = 0.0;      // SSR / (n - m), unbiased
    int n = 0;                // observations
    int m = 0;                // regressors
    Eigen::MatrixXd xtx_inv;  // (X'X)^{-1}

    int df() const noexcept { return n - m; }
};

// Multi-equation least squares with common regressors (one column of B per
// equation). Sigma uses the MLE convention E'E/T; loglik is the Gaussian
// log-likelihood implied by Sigma.
struct MultiOlsFit {
    Eigen::MatrixXd coef;   // m x k
    Eigen::MatrixXd resid;  // T x k
    Eigen::MatrixXd sigma;  // k x k, E'E/T
    double loglik = 0.0;
    int n = 0;
    int m = 0;
    Eigen::MatrixXd xtx_inv;
};

// Least squares of y on the columns of X. Throws ShapeError on dimension
// mismatch, LengthError when there are no degrees of freedom, RankDeficient
// when the smallest QR pivot falls below 1e-10 relative to the largest.
OlsFit ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X);

// Equation-by-equation least squares of the columns of Y on X. X may have
// zero columns, in which case the residuals are Y itself.
MultiOlsFit multivar_ols(const Eigen::MatrixXd& Y, const Eigen::MatrixXd& X);

// Gaussian log-likelihood of a T x k system with MLE residual covariance:
//   l = -(T*k/2)(1 + ln 2*pi) - (T/2) ln|Sigma|
double gaussian_loglik(int T, int k, const Eigen::MatrixXd& sigma);

// ln det of a symmetric positive definite matrix via Cholesky.
double log_det_psd(const Eigen::MatrixXd& S);

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Upper tail P(chi2_df > x). Absolute accuracy ~1e-10.
double chi_square_survival(double x, int df);

// x with P(chi2_df > x) = alpha.
double chi_square_critical(double alpha, int df);

// All eigenvalues (with multiplicity) of a real square matrix.
std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& A);

struct SymEig {
    Eigen::VectorXd values;   // descending
    Eigen::MatrixXd vectors;  // columns, normalized v' B v = 1
};

// Generalized symmetric eigenproblem A v = lambda B v with A PSD and B PD,
// solved by Cholesky reduction to a standard symmetric problem.
SymEig gen_eig_sym(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

}  // namespace tsecon
