#include "tsecon/cointegration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tsecon {

namespace {

struct TraceDist {
    double cv5;   // 5% asymptotic critical value
    double mean;  // asymptotic mean
    double var;   // asymptotic variance
};

// Asymptotic trace-distribution table per case, k_minus_r = 1..12.
// Moments and unpinned critical values were simulated from the defining
// Brownian functionals by tools/make_dist_tables (2,000-step walks); critical
// values with an exact published counterpart (MacKinnon-Haug-Michelis 1999
// as printed by standard software) carry that value verbatim.
const TraceDist kTraceDist[3][12] = {
    { // no deterministic terms
     {4.1083, 1.1345, 2.2016},
     {12.2976, 6.1066, 10.5986},
     {24.2816, 15.0602, 25.2335},
     {40.1083, 27.9924, 45.6388},
     {59.8940, 44.9121, 72.6669},
     {83.7144, 65.8140, 105.3234},
     {111.3747, 90.6561, 143.2007},
     {143.0863, 119.5400, 187.7488},
     {178.5245, 152.2232, 238.0848},
     {218.0629, 188.9293, 291.3016},
     {261.8927, 229.6615, 358.4517},
     {309.2308, 274.3145, 425.5096}},
    { // restricted constant
     {9.1645, 4.0649, 6.9686},
     {20.2618, 12.0414, 19.7684},
     {35.1927, 23.9865, 38.1991},
     {54.0160, 39.9245, 63.1463},
     {76.8503, 59.9017, 93.0337},
     {103.2992, 83.6446, 129.0569},
     {134.0620, 111.4677, 171.8915},
     {168.6490, 143.3239, 218.7188},
     {207.4212, 179.1864, 276.7778},
     {249.8884, 218.6587, 337.4173},
     {296.2700, 262.3342, 400.6240},
     {346.5585, 309.9412, 470.3791}},
    { // unrestricted constant
     {3.8415, 1.0017, 2.0092},
     {15.4634, 8.2994, 14.4390},
     {29.6620, 19.4529, 31.8953},
     {47.7385, 34.5672, 55.0154},
     {69.5271, 53.5899, 82.9142},
     {95.3311, 76.4684, 117.6376},
     {125.0757, 103.3908, 157.9796},
     {158.8519, 134.1695, 206.2892},
     {196.5342, 169.0382, 258.4166},
     {237.6481, 207.5690, 312.4502},
     {283.1178, 250.1625, 378.7633},
     {332.5585, 296.7680, 446.0392}},
};

const TraceDist& dist_entry(int k_minus_r, JohansenCase det_case) {
    if (k_minus_r < 1 || k_minus_r > 12) {
        throw RangeError("trace distribution table covers k-r in 1..12, got " +
                         std::to_string(k_minus_r));
    }
    return kTraceDist[static_cast<int>(det_case)][k_minus_r - 1];
}

// Residual maker: rows of A minus their projection on the columns of W.
Eigen::MatrixXd project_out(const Eigen::MatrixXd& A, const Eigen::MatrixXd& W) {
    if (W.cols() == 0) return A;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(W);
    const Eigen::MatrixXd R = qr.matrixR().topLeftCorner(W.cols(), W.cols());
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < W.cols(); ++i) {
        dmax = std::max(dmax, std::abs(R(i, i)));
        dmin = std::min(dmin, std::abs(R(i, i)));
    }
    if (!(dmax > 0.0) || dmin < 1e-10 * dmax) {
        throw RankDeficientError("johansen_trace: short-run regressors are rank deficient");
    }
    return A - W * qr.solve(A);
}

}  // namespace

const char* to_string(JohansenCase c) {
    switch (c) {
        case JohansenCase::NoDeterministic: return "no_deterministic";
        case JohansenCase::RestrictedConstant: return "restricted_constant";
        case JohansenCase::UnrestrictedConstant: return "unrestricted_constant";
    }
    return "?";
}

JohansenResult johansen_trace(const Dataset& ds, int vecm_lag, JohansenCase det_case) {
    if (vecm_lag < 0) throw DomainError("johansen_trace: negative lag");
    const int T = ds.rows();
    const int k = ds.cols();
    const int q = vecm_lag;
    const int t_eff = T - q - 1;
    const int n_short = k * q + (det_case == JohansenCase::UnrestrictedConstant ? 1 : 0);
    if (t_eff <= n_short + k + 2) {
        throw LengthError("johansen_trace: sample too short for " + std::to_string(q) +
                          " lagged differences");
    }
    const Eigen::MatrixXd& y = ds.observations();

    // Z0: dy_t; Z1: y_{t-1} (+ constant row in the restricted-constant case);
    // W: lagged differences (+ constant in the unrestricted-constant case).
    const int k1 = det_case == JohansenCase::RestrictedConstant ? k + 1 : k;
    Eigen::MatrixXd Z0(t_eff, k), Z1(t_eff, k1), W(t_eff, n_short);
    for (int t = q + 1; t < T; ++t) {
        const int r = t - q - 1;
        Z0.row(r) = y.row(t) - y.row(t - 1);
        Z1.row(r).head(k) = y.row(t - 1);
        if (k1 > k) Z1(r, k) = 1.0;
        for (int l = 1; l <= q; ++l) {
            W.block(r, (l - 1) * k, 1, k) = y.row(t - l) - y.row(t - l - 1);
        }
    }
    if (det_case == JohansenCase::UnrestrictedConstant) W.col(n_short - 1).setOnes();

    const Eigen::MatrixXd R0 = project_out(Z0, W);
    const Eigen::MatrixXd R1 = project_out(Z1, W);
    const Eigen::MatrixXd S00 = R0.transpose() * R0 / t_eff;
    const Eigen::MatrixXd S01 = R0.transpose() * R1 / t_eff;
    const Eigen::MatrixXd S11 = R1.transpose() * R1 / t_eff;

    Eigen::LLT<Eigen::MatrixXd> llt00(S00);
    if (llt00.info() != Eigen::Success) {
        throw RankDeficientError("johansen_trace: S00 is singular");
    }
    const Eigen::MatrixXd A = S01.transpose() * llt00.solve(S01);  // S10 S00^{-1} S01
    const SymEig eig = gen_eig_sym(A, S11);

    JohansenResult res;
    res.det_case = det_case;
    res.vecm_lag = q;
    res.k = k;
    res.t_eff = t_eff;
    res.beta = eig.vectors;
    res.eigenvalues.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        // clamp eigenproblem roundoff at the boundaries of [0,1)
        res.eigenvalues.push_back(std::min(std::max(eig.values(i), 0.0), 1.0 - 1e-15));
    }

    res.rows.reserve(static_cast<std::size_t>(k));
    res.selected_rank = k;
    for (int r = 0; r < k; ++r) {
        JohansenRankRow row;
        row.r = r;
        row.eigenvalue = res.eigenvalues[static_cast<std::size_t>(r)];
        double acc = 0.0;
        for (int i = r; i < k; ++i) acc += std::log1p(-res.eigenvalues[static_cast<std::size_t>(i)]);
        row.trace_stat = -t_eff * acc;
        row.max_eig_stat = -t_eff * std::log1p(-row.eigenvalue);
        row.cv_5pct = trace_critical_value(k - r, det_case);
        row.p_value = trace_pvalue(row.trace_stat, k - r, det_case);
        if (res.selected_rank == k && row.trace_stat < row.cv_5pct) res.selected_rank = r;
        res.rows.push_back(row);
    }
    return res;
}

double trace_critical_value(int k_minus_r, JohansenCase det_case) {
    return dist_entry(k_minus_r, det_case).cv5;
}

double trace_pvalue(double trace_stat, int k_minus_r, JohansenCase det_case) {
    const TraceDist& d = dist_entry(k_minus_r, det_case);
    if (trace_stat <= 0.0) return 1.0;
    const double shape = d.mean * d.mean / d.var;
    const double scale = d.var / d.mean;
    return gamma_q(shape, trace_stat / scale);
}

}  // namespace tsecon
