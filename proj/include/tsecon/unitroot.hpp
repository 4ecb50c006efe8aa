#pragma once

#include <span>
#include <vector>

#include "tsecon/series.hpp"

namespace tsecon {

// Deterministic terms included in the test regression.
enum class Deterministic { None, Constant, ConstantAndTrend };

const char* to_string(Deterministic spec);

// Lag policy for the augmented regression: a fixed count, or data-driven
// selection minimizing the Schwarz criterion over 0..max_lags on a common
// sample. max_lags < 0 means the Schwert rule floor(12*(T/100)^0.25).
struct LagPolicy {
    enum class Mode { Fixed, Auto };
    Mode mode = Mode::Auto;
    int lags = 0;
    int max_lags = -1;

    static LagPolicy fixed(int q) { return {Mode::Fixed, q, 0}; }
    static LagPolicy auto_schwarz(int max_q = -1) { return {Mode::Auto, 0, max_q}; }
};

struct AdfResult {
    Deterministic spec = Deterministic::Constant;
    int lags = 0;        // lagged differences used
    double statistic = 0.0;
    double p_value = 1.0;
    double cv_1pct = 0.0;
    double cv_5pct = 0.0;
    double cv_10pct = 0.0;
    int nobs = 0;        // effective sample of the final regression
};

// Augmented Dickey-Fuller regression of dy_t on deterministic terms, y_{t-1}
// and `lags` lagged differences; the statistic is the t ratio on y_{t-1}.
AdfResult adf_test(std::span<const double> values, Deterministic spec = Deterministic::Constant,
                   LagPolicy policy = LagPolicy::auto_schwarz());
AdfResult adf_test(const TimeSeries& ts, Deterministic spec = Deterministic::Constant,
                   LagPolicy policy = LagPolicy::auto_schwarz());

// Interpolated upper-tail probability of the asymptotic Dickey-Fuller t
// distribution; clamped to [0.0001, 0.9999] outside the embedded grid.
double df_pvalue(double t, Deterministic spec);

struct IntegrationOrder {
    int order = 0;
    bool capped = false;  // true when no difference up to max_d rejected
};

// Smallest d <= max_d whose d-th difference rejects the unit-root null at
// `alpha`; order = max_d and capped = true when none does.
IntegrationOrder integration_order(std::span<const double> values, int max_d = 2,
                                   double alpha = 0.05,
                                   Deterministic spec = Deterministic::Constant,
                                   LagPolicy policy = LagPolicy::auto_schwarz());
IntegrationOrder integration_order(const TimeSeries& ts, int max_d = 2, double alpha = 0.05,
                                   Deterministic spec = Deterministic::Constant,
                                   LagPolicy policy = LagPolicy::auto_schwarz());

}  // namespace tsecon
