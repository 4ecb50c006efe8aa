#include "tsecon/mclab.hpp"

#include <cmath>
#include <cstdio>

#include "tsecon/rng.hpp"

namespace tsecon {

namespace {

constexpr int kBurnIn = 100;  // discarded presample for stationary recursions

// Innovation matrix with one generator substream per column.
Eigen::MatrixXd innovations(std::uint64_t seed, int rows, int cols) {
    Eigen::MatrixXd e(rows, cols);
    for (int j = 0; j < cols; ++j) {
        GaussianRng g(derive_seed(seed, static_cast<std::uint64_t>(j)));
        for (int t = 0; t < rows; ++t) e(t, j) = g.next();
    }
    return e;
}

std::vector<std::string> default_names(int k) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) names.push_back("V" + std::to_string(j));
    return names;
}

constexpr Period kSimStart{2000, 1};

double companion_radius(const std::vector<Eigen::MatrixXd>& coef) {
    const int k = static_cast<int>(coef.front().rows());
    const int p = static_cast<int>(coef.size());
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(k * p, k * p);
    for (int l = 0; l < p; ++l) C.block(0, l * k, k, k) = coef[static_cast<std::size_t>(l)];
    if (p > 1) C.block(k, 0, k * (p - 1), k * (p - 1)).setIdentity();
    double radius = 0.0;
    for (const auto& ev : eigenvalues(C)) radius = std::max(radius, std::abs(ev));
    return radius;
}

}  // namespace

DgpSpec DgpSpec::random_walk(int k, int T, std::uint64_t seed) {
    DgpSpec s;
    s.kind = DgpKind::RandomWalk;
    s.k = k;
    s.T = T;
    s.seed = seed;
    return s;
}

DgpSpec DgpSpec::stationary_var(std::vector<Eigen::MatrixXd> coef, int T, std::uint64_t seed) {
    DgpSpec s;
    s.kind = DgpKind::StationaryVar;
    s.k = coef.empty() ? 0 : static_cast<int>(coef.front().rows());
    s.T = T;
    s.seed = seed;
    s.var_coef = std::move(coef);
    return s;
}

DgpSpec DgpSpec::cointegrated(const Eigen::Vector2d& vec, int T, std::uint64_t seed) {
    DgpSpec s;
    s.kind = DgpKind::CointegratedSystem;
    s.k = 2;
    s.T = T;
    s.seed = seed;
    s.coint_vector = vec;
    s.true_rank = 1;
    return s;
}

DgpSpec DgpSpec::causal(double coef, int T, std::uint64_t seed) {
    DgpSpec s;
    s.kind = DgpKind::CausalBivariate;
    s.k = 2;
    s.T = T;
    s.seed = seed;
    s.causal_coef = coef;
    return s;
}

DgpSpec DgpSpec::independent(int T, std::uint64_t seed) {
    DgpSpec s;
    s.kind = DgpKind::IndependentBivariate;
    s.k = 2;
    s.T = T;
    s.seed = seed;
    return s;
}

std::string DgpSpec::id() const {
    char buf[96];
    switch (kind) {
        case DgpKind::RandomWalk:
            std::snprintf(buf, sizeof(buf), "random_walk_k%d", k);
            break;
        case DgpKind::StationaryVar:
            std::snprintf(buf, sizeof(buf), "stationary_var_k%d_p%d", k,
                          static_cast<int>(var_coef.size()));
            break;
        case DgpKind::CointegratedSystem:
            std::snprintf(buf, sizeof(buf), "cointegrated_%g_%g", coint_vector(0),
                          coint_vector(1));
            break;
        case DgpKind::CausalBivariate:
            std::snprintf(buf, sizeof(buf), "causal_bivariate_c%g", causal_coef);
            break;
        case DgpKind::IndependentBivariate:
            std::snprintf(buf, sizeof(buf), "independent_bivariate");
            break;
    }
    return buf;
}

void DgpSpec::validate() const {
    if (k < 1) throw InvalidSpecError("dgp: variable count must be >= 1");
    if (T < 10) throw InvalidSpecError("dgp: sample length must be >= 10");
    switch (kind) {
        case DgpKind::RandomWalk:
            break;
        case DgpKind::StationaryVar: {
            if (var_coef.empty()) throw InvalidSpecError("dgp: stationary VAR needs lag matrices");
            for (const auto& A : var_coef) {
                if (A.rows() != k || A.cols() != k) {
                    throw InvalidSpecError("dgp: lag matrix dimensions must be k x k");
                }
            }
            const double radius = companion_radius(var_coef);
            if (radius >= 1.0) {
                throw InvalidSpecError("dgp: VAR parameters are explosive (spectral radius " +
                                       std::to_string(radius) + ")");
            }
            break;
        }
        case DgpKind::CointegratedSystem:
            if (k != 2) throw InvalidSpecError("dgp: cointegrated system is bivariate");
            if (coint_vector(1) == 0.0) {
                throw InvalidSpecError("dgp: cointegration vector must load on the second variable");
            }
            if (std::abs(ar_coef) >= 1.0) throw InvalidSpecError("dgp: |ar_coef| must be < 1");
            break;
        case DgpKind::CausalBivariate:
        case DgpKind::IndependentBivariate:
            if (k != 2) throw InvalidSpecError("dgp: bivariate process requires k = 2");
            if (std::abs(ar_coef) >= 1.0) throw InvalidSpecError("dgp: |ar_coef| must be < 1");
            break;
    }
}

Dataset simulate(const DgpSpec& spec) {
    spec.validate();
    const int T = spec.T;
    const int k = spec.k;
    Eigen::MatrixXd y(T, k);

    switch (spec.kind) {
        case DgpKind::RandomWalk: {
            const Eigen::MatrixXd e = innovations(spec.seed, T, k);
            for (int j = 0; j < k; ++j) {
                double level = 0.0;
                for (int t = 0; t < T; ++t) {
                    level += e(t, j);
                    y(t, j) = level;
                }
            }
            break;
        }
        case DgpKind::StationaryVar: {
            const int p = static_cast<int>(spec.var_coef.size());
            const int total = T + kBurnIn;
            const Eigen::MatrixXd e = innovations(spec.seed, total, k);
            Eigen::MatrixXd path = Eigen::MatrixXd::Zero(total, k);
            for (int t = 0; t < total; ++t) {
                Eigen::VectorXd x = e.row(t).transpose();
                for (int l = 1; l <= p && t - l >= 0; ++l) {
                    x += spec.var_coef[static_cast<std::size_t>(l - 1)] *
                         path.row(t - l).transpose();
                }
                path.row(t) = x.transpose();
            }
            y = path.bottomRows(T);
            break;
        }
        case DgpKind::CointegratedSystem: {
            const Eigen::MatrixXd e = innovations(spec.seed, T, 2);
            const double slope = -spec.coint_vector(0) / spec.coint_vector(1);
            double walk = 0.0, u = 0.0;
            for (int t = 0; t < T; ++t) {
                walk += e(t, 0);
                u = spec.ar_coef * u + e(t, 1);
                y(t, 0) = walk;
                y(t, 1) = slope * walk + u;
            }
            break;
        }
        case DgpKind::CausalBivariate: {
            const Eigen::MatrixXd e = innovations(spec.seed, T, 2);
            double yy = 0.0, xx = 0.0;
            for (int t = 0; t < T; ++t) {
                const double x_prev = xx;
                const double y_prev = yy;
                xx = spec.ar_coef * x_prev + e(t, 1);
                yy = spec.ar_coef * y_prev + spec.causal_coef * x_prev + e(t, 0);
                y(t, 0) = yy;
                y(t, 1) = xx;
            }
            break;
        }
        case DgpKind::IndependentBivariate: {
            const Eigen::MatrixXd e = innovations(spec.seed, T, 2);
            double a = 0.0, b = 0.0;
            for (int t = 0; t < T; ++t) {
                a = spec.ar_coef * a + e(t, 0);
                b = spec.ar_coef * b + e(t, 1);
                y(t, 0) = a;
                y(t, 1) = b;
            }
            break;
        }
    }

    std::vector<std::string> names;
    if (spec.kind == DgpKind::CausalBivariate || spec.kind == DgpKind::IndependentBivariate) {
        names = {"Y", "X"};
    } else {
        names = default_names(k);
    }
    return Dataset(std::move(names), kSimStart, std::move(y));
}

TestRunner adf_runner(Deterministic spec, LagPolicy policy) {
    std::string id = std::string("adf_") + to_string(spec);
    return {std::move(id), [spec, policy](const Dataset& ds) {
                const Eigen::VectorXd col = ds.column(0);
                return adf_test(std::span<const double>(col.data(),
                                                        static_cast<std::size_t>(col.size())),
                                spec, policy)
                    .p_value;
            }};
}

TestRunner johansen_rank0_runner(int vecm_lag, JohansenCase det_case) {
    std::string id = std::string("johansen_rank0_") + to_string(det_case);
    return {std::move(id), [vecm_lag, det_case](const Dataset& ds) {
                return johansen_trace(ds, vecm_lag, det_case).rows.front().p_value;
            }};
}

TestRunner ty_runner(int p, int d_max, RestrictionMode mode) {
    std::string id = "ty_p" + std::to_string(p) + "_d" + std::to_string(d_max);
    return {std::move(id), [p, d_max, mode](const Dataset& ds) {
                return toda_yamamoto(ds, 0, 1, p, d_max, mode).p_value;
            }};
}

std::string SizePowerReport::csv_header() {
    return "test,dgp,T,reps,alpha,rejections,rate,mc_se";
}

std::string SizePowerReport::csv_row() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%s,%d,%d,%g,%d,%.6f,%.6f", test_id.c_str(),
                  dgp_id.c_str(), T, replications, alpha, rejections, rate, mc_se);
    return buf;
}

SizePowerReport rejection_rate(const TestRunner& test, const DgpSpec& dgp, int replications,
                               double alpha, bool parallel) {
    if (replications < 100) {
        throw InvalidSpecError("rejection_rate: need at least 100 replications");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("rejection_rate: alpha in (0,1)");
    dgp.validate();

    // Slot per replication; aggregation afterwards is order-independent.
    std::vector<double> pvals(static_cast<std::size_t>(replications), -1.0);

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (int r = 0; r < replications; ++r) {
            DgpSpec child = dgp;
            child.seed = derive_seed(dgp.seed, static_cast<std::uint64_t>(r));
            try {
                pvals[static_cast<std::size_t>(r)] = test.p_value(simulate(child));
            } catch (const Error&) {
                pvals[static_cast<std::size_t>(r)] = -1.0;
            }
        }
    } else {
        for (int r = 0; r < replications; ++r) {
            DgpSpec child = dgp;
            child.seed = derive_seed(dgp.seed, static_cast<std::uint64_t>(r));
            try {
                pvals[static_cast<std::size_t>(r)] = test.p_value(simulate(child));
            } catch (const Error&) {
                pvals[static_cast<std::size_t>(r)] = -1.0;
            }
        }
    }

    SizePowerReport report;
    report.test_id = test.id;
    report.dgp_id = dgp.id();
    report.T = dgp.T;
    report.replications = replications;
    report.alpha = alpha;
    for (double p : pvals) {
        if (p < 0.0) {
            ++report.failures;
        } else if (p < alpha) {
            ++report.rejections;
        }
    }
    report.rate = static_cast<double>(report.rejections) / replications;
    report.mc_se = std::sqrt(report.rate * (1.0 - report.rate) / replications);
    return report;
}

}  // namespace tsecon
