#include <doctest.h>

#include <cmath>

#include "tsecon/numstat.hpp"
#include "tsecon/rng.hpp"

using namespace tsecon;

namespace {

Eigen::MatrixXd random_matrix(int r, int c, std::uint64_t seed) {
    GaussianRng g(seed);
    Eigen::MatrixXd m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = g.next();
    return m;
}

}  // namespace

TEST_CASE("ols exact fit") {
    Eigen::VectorXd y(3);
    y << 1, 2, 3;
    Eigen::MatrixXd X(3, 1);
    X << 1, 2, 3;
    const OlsFit fit = ols(y, X);
    CHECK(fit.coef(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fit.residuals.norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("ols on a constant regressor recovers the mean") {
    Eigen::VectorXd y(3);
    y << 1, 2, 2;
    const OlsFit fit = ols(y, Eigen::MatrixXd::Ones(3, 1));
    CHECK(fit.coef(0) == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("ols matches hand-solved normal equations on the 4-point fixture") {
    // y = [0,1,1,2], X = [[1,0],[1,1],[1,2],[1,3]]
    // X'X = [[4,6],[6,14]], X'y = [4,9], det = 20
    // b = [(14*4 - 6*9)/20, (4*9 - 6*4)/20] = [0.1, 0.6]
    Eigen::VectorXd y(4);
    y << 0, 1, 1, 2;
    Eigen::MatrixXd X(4, 2);
    X << 1, 0, 1, 1, 1, 2, 1, 3;
    const double det = 4.0 * 14.0 - 6.0 * 6.0;
    const double b0 = (14.0 * 4.0 - 6.0 * 9.0) / det;
    const double b1 = (4.0 * 9.0 - 6.0 * 4.0) / det;
    const OlsFit fit = ols(y, X);
    CHECK(fit.coef(0) == doctest::Approx(b0).epsilon(1e-10));
    CHECK(fit.coef(1) == doctest::Approx(b1).epsilon(1e-10));
    CHECK(fit.n == 4);
    CHECK(fit.m == 2);
    CHECK(fit.df() == 2);
}

TEST_CASE("ols residuals are orthogonal to the regressors") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        const Eigen::MatrixXd X = random_matrix(40, 4, seed);
        const Eigen::VectorXd y = random_matrix(40, 1, seed + 100).col(0);
        const OlsFit fit = ols(y, X);
        const double rel = (X.transpose() * fit.residuals).norm() /
                           (X.norm() * (fit.residuals.norm() + 1e-300));
        CHECK(rel < 1e-8);
        // standard errors against the direct formula
        const Eigen::MatrixXd direct = (X.transpose() * X).inverse();
        for (int j = 0; j < 4; ++j) {
            CHECK(fit.std_err(j) ==
                  doctest::Approx(std::sqrt(fit.sigma2 * direct(j, j))).epsilon(1e-9));
        }
    }
}

TEST_CASE("ols error paths") {
    Eigen::VectorXd y(3);
    y << 1, 2, 3;
    CHECK_THROWS_AS(ols(y, Eigen::MatrixXd::Ones(4, 1)), ShapeError);
    CHECK_THROWS_AS(ols(y, Eigen::MatrixXd::Ones(3, 3)), LengthError);
    Eigen::MatrixXd collinear(6, 2);
    for (int i = 0; i < 6; ++i) {
        collinear(i, 0) = i + 1.0;
        collinear(i, 1) = 2.0 * (i + 1.0);
    }
    Eigen::VectorXd y6 = Eigen::VectorXd::LinSpaced(6, 0, 5);
    CHECK_THROWS_AS(ols(y6, collinear), RankDeficientError);
}

TEST_CASE("multivar_ols identifies exact linear maps") {
    const Eigen::MatrixXd X = random_matrix(30, 3, 21);
    Eigen::MatrixXd B0(3, 2);
    B0 << 0.5, -1.0, 2.0, 0.25, -0.75, 1.5;
    const Eigen::MatrixXd Y = X * B0;
    const MultiOlsFit fit = multivar_ols(Y, X);
    CHECK((fit.coef - B0).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(fit.sigma.cwiseAbs().maxCoeff() < 1e-18);
}

TEST_CASE("multivar_ols reduces to single-equation ols column by column") {
    const Eigen::MatrixXd X = random_matrix(20, 3, 31);
    const Eigen::MatrixXd Y = random_matrix(20, 2, 32);
    const MultiOlsFit fit = multivar_ols(Y, X);
    for (int j = 0; j < 2; ++j) {
        const OlsFit single = ols(Y.col(j), X);
        CHECK((fit.coef.col(j) - single.coef).cwiseAbs().maxCoeff() < 1e-12);
    }
    // k = 1 consistency
    const MultiOlsFit one = multivar_ols(Y.leftCols(1), X);
    const OlsFit single = ols(Y.col(0), X);
    CHECK((one.coef.col(0) - single.coef).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("gaussian log-likelihood closed forms") {
    Eigen::MatrixXd unit(1, 1);
    unit << 1.0;
    CHECK(gaussian_loglik(1, 1, unit) == doctest::Approx(-1.4189385332).epsilon(1e-9));

    // diagonal Sigma constructed to a prescribed log determinant
    auto sigma_with_logdet = [](double ld, int k) {
        return Eigen::MatrixXd(Eigen::VectorXd::Constant(k, std::exp(ld / k)).asDiagonal());
    };
    CHECK(gaussian_loglik(149, 3, sigma_with_logdet(29.8696, 3)) ==
          doctest::Approx(-2859.55).epsilon(1e-5));
    CHECK(gaussian_loglik(149, 3, sigma_with_logdet(36.6372, 3)) ==
          doctest::Approx(-3363.74).epsilon(1e-5));
}

TEST_CASE("log-likelihood and log-determinant invert each other") {
    GaussianRng g(5);
    for (int rep = 0; rep < 5; ++rep) {
        const Eigen::MatrixXd A = random_matrix(6, 3, 500 + static_cast<std::uint64_t>(rep));
        const Eigen::MatrixXd S = A.transpose() * A / 6.0;
        const double ld = log_det_psd(S);
        const double ll = gaussian_loglik(50, 3, S);
        const double recovered = -2.0 * ll / 50.0 - 3.0 * (1.0 + std::log(2.0 * M_PI));
        CHECK(recovered == doctest::Approx(ld).epsilon(1e-10));
    }
}

TEST_CASE("log_det_psd values and failure") {
    CHECK(log_det_psd(Eigen::MatrixXd::Identity(3, 3)) == doctest::Approx(0.0).epsilon(1e-14));
    Eigen::MatrixXd d(2, 2);
    d << 2, 0, 0, 3;
    CHECK(log_det_psd(d) == doctest::Approx(std::log(6.0)).epsilon(1e-12));
    Eigen::MatrixXd s(2, 2);
    s << 2, 1, 1, 2;
    CHECK(log_det_psd(s) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    Eigen::MatrixXd indef(2, 2);
    indef << 1, 2, 2, 1;
    CHECK_THROWS_AS(log_det_psd(indef), NotPositiveDefiniteError);
}

TEST_CASE("chi-square survival anchors") {
    CHECK(chi_square_survival(0.0, 1) == 1.0);
    CHECK(chi_square_survival(0.0, 9) == 1.0);
    CHECK(chi_square_survival(3.2017, 4) == doctest::Approx(0.5246).epsilon(0.001));
    CHECK(std::abs(chi_square_survival(3.2017, 4) - 0.5246) < 0.0005);
    CHECK(std::abs(chi_square_survival(3.9824, 4) - 0.4084) < 0.0005);
    CHECK(std::abs(chi_square_survival(9.5480, 9) - 0.3883) < 0.0005);
    CHECK_THROWS_AS(chi_square_survival(-0.1, 4), DomainError);
    CHECK_THROWS_AS(chi_square_survival(1.0, 0), DomainError);
}

TEST_CASE("chi-square survival is a proper decreasing tail") {
    double prev = 1.0;
    for (double x = 0.25; x < 30.0; x += 0.25) {
        const double s = chi_square_survival(x, 5);
        CHECK(s < prev);
        prev = s;
        CHECK(gamma_p(2.5, x / 2.0) + gamma_q(2.5, x / 2.0) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("chi-square critical value inverts the survival function") {
    for (int df : {1, 4, 9}) {
        const double c = chi_square_critical(0.05, df);
        CHECK(chi_square_survival(c, df) == doctest::Approx(0.05).epsilon(1e-9));
    }
    // 5% critical value with 9 degrees of freedom, standard tables
    CHECK(chi_square_critical(0.05, 9) == doctest::Approx(16.9190).epsilon(1e-4));
}

TEST_CASE("eigenvalues of small fixtures") {
    const auto id = eigenvalues(Eigen::MatrixXd::Identity(2, 2));
    CHECK(id.size() == 2);
    for (const auto& ev : id) CHECK(std::abs(ev - 1.0) < 1e-12);

    Eigen::MatrixXd rot(2, 2);
    rot << 0, -1, 1, 0;
    auto evs = eigenvalues(rot);
    REQUIRE(evs.size() == 2);
    for (const auto& ev : evs) {
        CHECK(std::abs(ev.real()) < 1e-12);
        CHECK(std::abs(std::abs(ev.imag()) - 1.0) < 1e-12);
        CHECK(std::abs(ev) == doctest::Approx(1.0).epsilon(1e-12));
    }

    // characteristic polynomial x^2 - 0.9x + 0.18 has roots 0.6 and 0.3
    Eigen::MatrixXd a(2, 2);
    a << 0.5, 0.2, 0.1, 0.4;
    auto roots = eigenvalues(a);
    std::sort(roots.begin(), roots.end(),
              [](const auto& l, const auto& r) { return l.real() > r.real(); });
    CHECK(std::abs(roots[0] - std::complex<double>(0.6, 0.0)) < 1e-8);
    CHECK(std::abs(roots[1] - std::complex<double>(0.3, 0.0)) < 1e-8);
}

TEST_CASE("eigenvalues satisfy trace and determinant identities") {
    for (std::uint64_t seed : {41u, 42u, 43u, 44u}) {
        const Eigen::MatrixXd A = random_matrix(3, 3, seed);
        const auto evs = eigenvalues(A);
        std::complex<double> sum = 0.0, prod = 1.0;
        for (const auto& ev : evs) {
            sum += ev;
            prod *= ev;
        }
        CHECK(std::abs(sum.real() - A.trace()) < 1e-6 * std::max(1.0, std::abs(A.trace())));
        CHECK(std::abs(sum.imag()) < 1e-8);
        const double det = A.determinant();
        CHECK(std::abs(prod.real() - det) < 1e-6 * std::max(1.0, std::abs(det)));
    }
}

TEST_CASE("generalized symmetric eigenproblem") {
    // B = I reduces to the standard problem
    Eigen::MatrixXd a(2, 2);
    a << 2, 1, 1, 2;
    const SymEig std_prob = gen_eig_sym(a, Eigen::MatrixXd::Identity(2, 2));
    CHECK(std_prob.values(0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(std_prob.values(1) == doctest::Approx(1.0).epsilon(1e-12));

    // A = B gives all ones
    const SymEig same = gen_eig_sym(a, a);
    CHECK(same.values(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(same.values(1) == doctest::Approx(1.0).epsilon(1e-12));

    // diagonal ratios: A = diag(2,3), B = diag(1,3) -> {2, 1}
    Eigen::MatrixXd da = Eigen::Vector2d(2, 3).asDiagonal();
    Eigen::MatrixXd db = Eigen::Vector2d(1, 3).asDiagonal();
    const SymEig diag = gen_eig_sym(da, db);
    CHECK(diag.values(0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(diag.values(1) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(gen_eig_sym(a, Eigen::MatrixXd::Zero(2, 2)), NotPositiveDefiniteError);
}

TEST_CASE("generalized eigenvalues are congruence invariant and B-normalized") {
    for (std::uint64_t seed : {71u, 72u, 73u}) {
        const Eigen::MatrixXd M = random_matrix(3, 3, seed);
        const Eigen::MatrixXd N = random_matrix(3, 3, seed + 10);
        const Eigen::MatrixXd A = M * M.transpose();
        const Eigen::MatrixXd B =
            N * N.transpose() + 0.5 * Eigen::MatrixXd::Identity(3, 3);
        const SymEig base = gen_eig_sym(A, B);
        for (int i = 0; i < 3; ++i) {
            const Eigen::VectorXd v = base.vectors.col(i);
            CHECK(v.dot(B * v) == doctest::Approx(1.0).epsilon(1e-9));
            // residual of the defining equation
            CHECK((A * v - base.values(i) * (B * v)).norm() < 1e-8 * (1.0 + A.norm()));
        }
        const Eigen::MatrixXd C = random_matrix(3, 3, seed + 20) +
                                  3.0 * Eigen::MatrixXd::Identity(3, 3);
        const SymEig cong = gen_eig_sym(C.transpose() * A * C, C.transpose() * B * C);
        for (int i = 0; i < 3; ++i) {
            CHECK(cong.values(i) == doctest::Approx(base.values(i)).epsilon(1e-8));
        }
    }
}
