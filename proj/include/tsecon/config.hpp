#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tsecon/causality.hpp"
#include "tsecon/cointegration.hpp"
#include "tsecon/unitroot.hpp"

namespace tsecon {

struct TransformSpec {
    bool log = false;
    bool seasonal_adjust = false;
};

enum class VarBasis { Levels, FirstDifferences };

const char* to_string(VarBasis basis);

// Declarative pipeline configuration. File format: `key = value` lines,
// '#' comments, blank lines ignored. See docs in README for the schema.
struct PipelineConfig {
    int config_version = 1;
    std::string input_path;
    std::vector<std::string> variables;
    std::map<std::string, TransformSpec> transforms;

    Deterministic adf_spec = Deterministic::Constant;
    LagPolicy adf_policy = LagPolicy::auto_schwarz();
    int max_p = 8;
    VarBasis var_basis = VarBasis::Levels;
    JohansenCase johansen_case = JohansenCase::RestrictedConstant;
    int vecm_lag = -1;  // -1: derive as selected p - 1
    int ty_dmax = -1;   // -1: derive from per-variable integration orders
    RestrictionMode ty_mode = RestrictionMode::FirstP;
    double alpha = 0.05;
    std::string output_dir = "out";
    std::uint64_t seed = 20030101;  // demo generation seed, echoed in metadata
};

PipelineConfig parse_config_text(const std::string& text, const std::string& origin);
PipelineConfig load_config(const std::string& path);

// Serialization used by `demo-data` to write a runnable config.
std::string config_to_text(const PipelineConfig& config);

}  // namespace tsecon
