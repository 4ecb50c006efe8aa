#pragma once

#include <string>
#include <vector>

#include "tsecon/varmodel.hpp"

namespace tsecon {

// Which of the candidate cause's coefficients the Wald test restricts:
// FirstP tests lags 1..p (the canonical construction, the augmentation lags
// stay untested); AllLags tests lags 1..p+d_max.
enum class RestrictionMode { FirstP, AllLags };

const char* to_string(RestrictionMode mode);

struct WaldResult {
    double statistic = 0.0;
    int df = 0;
};

// Wald test of joint zero restrictions on one equation of a fitted VAR:
// W = b_R' V_RR^{-1} b_R with V the equation's coefficient covariance from
// the unbiased residual variance.
WaldResult wald_linear_restriction(const VarFit& fit, int equation,
                                   const std::vector<int>& coef_indices);

struct TyResult {
    std::string target;
    std::string cause;
    int p = 0;      // tested lag count
    int d_max = 0;  // augmentation lags
    RestrictionMode mode = RestrictionMode::FirstP;
    double statistic = 0.0;
    int df = 0;
    double p_value = 1.0;
};

// Toda-Yamamoto causality test: fit a levels VAR(p + d_max) with intercept
// and Wald-test the cause's lag coefficients in the target's equation.
TyResult toda_yamamoto(const Dataset& ds, int target, int cause, int p, int d_max,
                       RestrictionMode mode = RestrictionMode::FirstP);

}  // namespace tsecon
