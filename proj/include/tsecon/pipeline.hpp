#pragma once

#include <string>
#include <vector>

#include "tsecon/causality.hpp"
#include "tsecon/cointegration.hpp"
#include "tsecon/config.hpp"
#include "tsecon/unitroot.hpp"
#include "tsecon/varmodel.hpp"

namespace tsecon {

struct AdfPair {
    std::string variable;
    AdfResult level;
    AdfResult first_difference;
};

// Everything one pipeline run produces; emit_report serializes it.
struct ReportBundle {
    PipelineConfig config;
    std::vector<std::string> var_names;  // names entering the system, post-transform
    std::vector<AdfPair> stationarity;
    LagSelectionTable lag_table;
    int selected_p = 1;   // AIC choice, floored at 1 for the downstream stages
    VarFit var_fit;       // on the configured basis
    StabilityReport stab;
    std::vector<LmResult> lm;  // h = 1..12
    JohansenResult johansen;   // always on levels
    int d_max = 0;
    bool d_max_capped = false;
    std::vector<TyResult> causality;  // every ordered (target, cause) pair
    std::string svg;
};

// Executes transforms -> per-variable ADF (level and first difference) ->
// lag selection -> VAR fit at the AIC order -> stability -> serial
// correlation LM (h = 1..12) -> Johansen trace -> Toda-Yamamoto for every
// ordered pair. Errors carry the failing stage's name.
ReportBundle run_pipeline(const PipelineConfig& config);

}  // namespace tsecon
