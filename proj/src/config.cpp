#include "tsecon/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tsecon {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

long parse_int(const std::string& v, const std::string& key) {
    errno = 0;
    char* end = nullptr;
    const long x = std::strtol(v.c_str(), &end, 10);
    if (errno != 0 || end != v.c_str() + v.size()) {
        throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
    }
    return x;
}

double parse_real(const std::string& v, const std::string& key) {
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (errno != 0 || end != v.c_str() + v.size()) {
        throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
    }
    return x;
}

TransformSpec parse_transform(const std::string& v, const std::string& key) {
    TransformSpec t;
    for (const auto& part : split_list(v)) {
        if (part == "none") {
            // explicit no-op
        } else if (part == "log") {
            t.log = true;
        } else if (part == "seasonal_adjust") {
            t.seasonal_adjust = true;
        } else {
            throw ConfigError("key '" + key + "': unknown transform '" + part + "'");
        }
    }
    return t;
}

}  // namespace

const char* to_string(VarBasis basis) {
    return basis == VarBasis::Levels ? "levels" : "first_differences";
}

PipelineConfig parse_config_text(const std::string& text, const std::string& origin) {
    PipelineConfig cfg;
    std::stringstream stream(text);
    std::string line;
    std::size_t lineno = 0;
    bool saw_input = false, saw_variables = false;
    while (std::getline(stream, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty value for '" +
                              key + "'");
        }

        if (key == "config_version") {
            cfg.config_version = static_cast<int>(parse_int(value, key));
            if (cfg.config_version != 1) {
                throw ConfigError("unsupported config_version " + value);
            }
        } else if (key == "input") {
            cfg.input_path = value;
            saw_input = true;
        } else if (key == "variables") {
            cfg.variables = split_list(value);
            saw_variables = true;
        } else if (key.starts_with("transform.")) {
            cfg.transforms[key.substr(10)] = parse_transform(value, key);
        } else if (key == "adf_spec") {
            if (value == "none") cfg.adf_spec = Deterministic::None;
            else if (value == "constant") cfg.adf_spec = Deterministic::Constant;
            else if (value == "constant_trend") cfg.adf_spec = Deterministic::ConstantAndTrend;
            else throw ConfigError("key 'adf_spec': unknown value '" + value + "'");
        } else if (key == "adf_lags") {
            if (value == "auto") cfg.adf_policy = LagPolicy::auto_schwarz(cfg.adf_policy.max_lags);
            else cfg.adf_policy = LagPolicy::fixed(static_cast<int>(parse_int(value, key)));
        } else if (key == "adf_max_lags") {
            if (value == "auto") {
                if (cfg.adf_policy.mode == LagPolicy::Mode::Auto) cfg.adf_policy.max_lags = -1;
            } else {
                const int q = static_cast<int>(parse_int(value, key));
                if (cfg.adf_policy.mode == LagPolicy::Mode::Auto) cfg.adf_policy.max_lags = q;
            }
        } else if (key == "max_p") {
            cfg.max_p = static_cast<int>(parse_int(value, key));
        } else if (key == "var_basis") {
            if (value == "levels") cfg.var_basis = VarBasis::Levels;
            else if (value == "first_differences") cfg.var_basis = VarBasis::FirstDifferences;
            else throw ConfigError("key 'var_basis': unknown value '" + value + "'");
        } else if (key == "johansen_case") {
            if (value == "no_deterministic") cfg.johansen_case = JohansenCase::NoDeterministic;
            else if (value == "restricted_constant")
                cfg.johansen_case = JohansenCase::RestrictedConstant;
            else if (value == "unrestricted_constant")
                cfg.johansen_case = JohansenCase::UnrestrictedConstant;
            else throw ConfigError("key 'johansen_case': unknown value '" + value + "'");
        } else if (key == "vecm_lag") {
            cfg.vecm_lag = value == "derive" ? -1 : static_cast<int>(parse_int(value, key));
        } else if (key == "ty_dmax") {
            cfg.ty_dmax = value == "derive" ? -1 : static_cast<int>(parse_int(value, key));
        } else if (key == "ty_mode") {
            if (value == "first_p") cfg.ty_mode = RestrictionMode::FirstP;
            else if (value == "all_lags") cfg.ty_mode = RestrictionMode::AllLags;
            else throw ConfigError("key 'ty_mode': unknown value '" + value + "'");
        } else if (key == "alpha") {
            cfg.alpha = parse_real(value, key);
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(std::strtoull(value.c_str(), nullptr, 10));
        } else {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": unknown key '" + key +
                              "'");
        }
    }

    if (!saw_input) throw ConfigError(origin + ": missing required key 'input'");
    if (!saw_variables || cfg.variables.empty()) {
        throw ConfigError(origin + ": missing required key 'variables'");
    }
    for (const auto& [name, _] : cfg.transforms) {
        if (std::find(cfg.variables.begin(), cfg.variables.end(), name) ==
            cfg.variables.end()) {
            throw ConfigError("transform refers to unknown variable '" + name + "'");
        }
    }
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
        throw ConfigError("alpha must lie strictly between 0 and 1");
    }
    if (cfg.max_p < 1) throw ConfigError("max_p must be >= 1");
    if (cfg.adf_policy.mode == LagPolicy::Mode::Fixed && cfg.adf_policy.lags < 0) {
        throw ConfigError("adf_lags must be >= 0");
    }
    return cfg;
}

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

std::string config_to_text(const PipelineConfig& cfg) {
    std::stringstream out;
    out << "config_version = " << cfg.config_version << "\n";
    out << "input = " << cfg.input_path << "\n";
    out << "variables = ";
    for (std::size_t i = 0; i < cfg.variables.size(); ++i) {
        out << (i ? ", " : "") << cfg.variables[i];
    }
    out << "\n";
    for (const auto& [name, t] : cfg.transforms) {
        out << "transform." << name << " = ";
        if (!t.log && !t.seasonal_adjust) {
            out << "none";
        } else {
            bool first = true;
            if (t.log) {
                out << "log";
                first = false;
            }
            if (t.seasonal_adjust) out << (first ? "" : ", ") << "seasonal_adjust";
        }
        out << "\n";
    }
    out << "adf_spec = "
        << (cfg.adf_spec == Deterministic::None
                ? "none"
                : cfg.adf_spec == Deterministic::Constant ? "constant" : "constant_trend")
        << "\n";
    if (cfg.adf_policy.mode == LagPolicy::Mode::Auto) {
        out << "adf_lags = auto\n";
        out << "adf_max_lags = "
            << (cfg.adf_policy.max_lags < 0 ? std::string("auto")
                                            : std::to_string(cfg.adf_policy.max_lags))
            << "\n";
    } else {
        out << "adf_lags = " << cfg.adf_policy.lags << "\n";
    }
    out << "max_p = " << cfg.max_p << "\n";
    out << "var_basis = " << to_string(cfg.var_basis) << "\n";
    out << "johansen_case = " << to_string(cfg.johansen_case) << "\n";
    out << "vecm_lag = " << (cfg.vecm_lag < 0 ? std::string("derive") : std::to_string(cfg.vecm_lag))
        << "\n";
    out << "ty_dmax = " << (cfg.ty_dmax < 0 ? std::string("derive") : std::to_string(cfg.ty_dmax))
        << "\n";
    out << "ty_mode = " << to_string(cfg.ty_mode) << "\n";
    out << "alpha = " << cfg.alpha << "\n";
    out << "output_dir = " << cfg.output_dir << "\n";
    out << "seed = " << cfg.seed << "\n";
    return out.str();
}

}  // namespace tsecon
