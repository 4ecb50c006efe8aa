#include "tsecon/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tsecon/version.hpp"

namespace tsecon {

namespace {

using nlohmann::ordered_json;

// 12 significant digits: stable to serialize, far beyond display precision.
double sig12(double x) {
    if (!std::isfinite(x)) throw DomainError("report: non-finite value");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string fmt4(double v) { return fmt("%.4f", v); }

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

ordered_json adf_json(const AdfResult& r) {
    return ordered_json{{"statistic", sig12(r.statistic)}, {"p_value", sig12(r.p_value)},
                        {"lags", r.lags},                  {"nobs", r.nobs},
                        {"cv_1pct", sig12(r.cv_1pct)},     {"cv_5pct", sig12(r.cv_5pct)},
                        {"cv_10pct", sig12(r.cv_10pct)},   {"spec", to_string(r.spec)}};
}

std::string root_string(double re, double im) {
    if (im == 0.0) return fmt("%.6f", re);
    return fmt("%.6f", re) + (im < 0 ? " - " : " + ") + fmt("%.6f", std::abs(im)) + "i";
}

}  // namespace

ordered_json results_json(const ReportBundle& b) {
    ordered_json j;
    j["schema_version"] = 1;
    j["variables"] = b.var_names;

    j["stationarity"] = ordered_json::array();
    for (const auto& row : b.stationarity) {
        j["stationarity"].push_back(ordered_json{{"variable", row.variable},
                                                 {"level", adf_json(row.level)},
                                                 {"first_difference",
                                                  adf_json(row.first_difference)}});
    }

    ordered_json lag;
    lag["t_common"] = b.lag_table.t_common;
    lag["k"] = b.lag_table.k;
    lag["rows"] = ordered_json::array();
    for (const auto& r : b.lag_table.rows) {
        ordered_json row{{"p", r.p},           {"loglik", sig12(r.loglik)},
                         {"lr", nullptr},      {"fpe", sig12(r.fpe)},
                         {"aic", sig12(r.aic)}, {"sc", sig12(r.sc)},
                         {"hq", sig12(r.hq)}};
        if (r.lr) row["lr"] = sig12(*r.lr);
        ordered_json marks = ordered_json::array();
        if (r.lr_marked) marks.push_back("lr");
        if (r.fpe_min) marks.push_back("fpe");
        if (r.aic_min) marks.push_back("aic");
        if (r.sc_min) marks.push_back("sc");
        if (r.hq_min) marks.push_back("hq");
        row["marks"] = marks;
        lag["rows"].push_back(row);
    }
    lag["selected"] = ordered_json{{"lr", b.lag_table.selected_lr},
                                   {"fpe", b.lag_table.selected_fpe},
                                   {"aic", b.lag_table.selected_aic},
                                   {"sc", b.lag_table.selected_sc},
                                   {"hq", b.lag_table.selected_hq}};
    j["lag_selection"] = lag;

    ordered_json var;
    var["basis"] = to_string(b.config.var_basis);
    var["p"] = b.var_fit.p;
    var["k"] = b.var_fit.k;
    var["t_eff"] = b.var_fit.t_eff;
    var["loglik"] = sig12(b.var_fit.loglik);
    var["intercept"] = ordered_json::array();
    for (int i = 0; i < b.var_fit.k; ++i) var["intercept"].push_back(sig12(b.var_fit.intercept_vec(i)));
    var["lag_coefficients"] = ordered_json::array();
    for (int l = 0; l < b.var_fit.p; ++l) {
        ordered_json mat = ordered_json::array();
        const auto& A = b.var_fit.lag_coef[static_cast<std::size_t>(l)];
        for (int i = 0; i < b.var_fit.k; ++i) {
            ordered_json r = ordered_json::array();
            for (int c = 0; c < b.var_fit.k; ++c) r.push_back(sig12(A(i, c)));
            mat.push_back(r);
        }
        var["lag_coefficients"].push_back(ordered_json{{"lag", l + 1}, {"matrix", mat}});
    }
    ordered_json sigma = ordered_json::array();
    for (int i = 0; i < b.var_fit.k; ++i) {
        ordered_json r = ordered_json::array();
        for (int c = 0; c < b.var_fit.k; ++c) r.push_back(sig12(b.var_fit.sigma(i, c)));
        sigma.push_back(r);
    }
    var["sigma"] = sigma;
    j["var"] = var;

    ordered_json stab;
    stab["stable"] = b.stab.stable;
    stab["roots"] = ordered_json::array();
    for (const auto& root : b.stab.roots) {
        stab["roots"].push_back(ordered_json{{"re", sig12(root.real())},
                                             {"im", sig12(root.imag())},
                                             {"modulus", sig12(std::abs(root))}});
    }
    j["stability"] = stab;

    j["serial_correlation_lm"] = ordered_json::array();
    for (const auto& r : b.lm) {
        j["serial_correlation_lm"].push_back(ordered_json{{"lag", r.lag},
                                                          {"statistic", sig12(r.statistic)},
                                                          {"df", r.df},
                                                          {"p_value", sig12(r.p_value)}});
    }

    ordered_json joh;
    joh["case"] = to_string(b.johansen.det_case);
    joh["vecm_lag"] = b.johansen.vecm_lag;
    joh["t_eff"] = b.johansen.t_eff;
    joh["selected_rank"] = b.johansen.selected_rank;
    joh["rows"] = ordered_json::array();
    for (const auto& r : b.johansen.rows) {
        joh["rows"].push_back(ordered_json{{"rank", r.r},
                                           {"eigenvalue", sig12(r.eigenvalue)},
                                           {"trace", sig12(r.trace_stat)},
                                           {"cv_5pct", sig12(r.cv_5pct)},
                                           {"p_value", sig12(r.p_value)},
                                           {"max_eig", sig12(r.max_eig_stat)}});
    }
    j["johansen"] = joh;

    ordered_json ty;
    ty["p"] = b.selected_p;
    ty["d_max"] = b.d_max;
    ty["d_max_capped"] = b.d_max_capped;
    ty["mode"] = to_string(b.causality.empty() ? b.config.ty_mode : b.causality.front().mode);
    ty["tests"] = ordered_json::array();
    for (const auto& t : b.causality) {
        ty["tests"].push_back(ordered_json{{"target", t.target},
                                           {"cause", t.cause},
                                           {"statistic", sig12(t.statistic)},
                                           {"df", t.df},
                                           {"p_value", sig12(t.p_value)}});
    }
    j["causality"] = ty;
    return j;
}

ordered_json run_meta_json(const ReportBundle& b) {
    ordered_json meta;
    meta["tool"] = "tsecon";
    meta["version"] = kVersion;
    meta["seed"] = b.config.seed;
    ordered_json cfg;
    cfg["config_version"] = b.config.config_version;
    cfg["input"] = b.config.input_path;
    cfg["variables"] = b.config.variables;
    ordered_json tr = ordered_json::object();
    for (const auto& [name, t] : b.config.transforms) {
        std::string s;
        if (t.log) s = "log";
        if (t.seasonal_adjust) s += (s.empty() ? "" : ",") + std::string("seasonal_adjust");
        if (s.empty()) s = "none";
        tr[name] = s;
    }
    cfg["transforms"] = tr;
    cfg["adf_spec"] = to_string(b.config.adf_spec);
    cfg["adf_lags"] = b.config.adf_policy.mode == LagPolicy::Mode::Auto
                          ? std::string("auto")
                          : std::to_string(b.config.adf_policy.lags);
    cfg["max_p"] = b.config.max_p;
    cfg["var_basis"] = to_string(b.config.var_basis);
    cfg["johansen_case"] = to_string(b.config.johansen_case);
    cfg["vecm_lag"] = b.config.vecm_lag < 0 ? ordered_json("derive")
                                            : ordered_json(b.config.vecm_lag);
    cfg["ty_dmax"] = b.config.ty_dmax < 0 ? ordered_json("derive")
                                          : ordered_json(b.config.ty_dmax);
    cfg["ty_mode"] = to_string(b.config.ty_mode);
    cfg["alpha"] = b.config.alpha;
    cfg["output_dir"] = b.config.output_dir;
    meta["config"] = cfg;
    meta["data_note"] =
        "Reference statistics embedded in this toolkit come from published asymptotic "
        "tables; any bundled demonstration data are synthetic (seeded random walks), so "
        "results computed from them correspond to no real-world dataset and published "
        "table values are not reproducible from this input.";
    return meta;
}

std::string render_report_text(const ordered_json& j) {
    std::ostringstream out;
    const auto& vars = j.at("variables");

    out << "Time-series econometrics pipeline report\n";
    out << "=========================================\n\n";
    out << "Variables:";
    for (const auto& v : vars) out << " " << v.get<std::string>();
    out << "\n\n";

    // ---- stationarity
    std::size_t name_w = 10;
    for (const auto& row : j.at("stationarity")) {
        name_w = std::max(name_w, row.at("variable").get<std::string>().size() + 2);
    }
    out << "Table 1. ADF unit root tests\n";
    out << pad("Variable", name_w) << pad("t (level)", 22) << "t (1st difference)\n";
    for (const auto& row : j.at("stationarity")) {
        const auto& lv = row.at("level");
        const auto& fd = row.at("first_difference");
        out << pad(row.at("variable").get<std::string>(), name_w)
            << pad(fmt4(lv.at("statistic").get<double>()) + " (" +
                       fmt4(lv.at("p_value").get<double>()) + ")",
                   22)
            << fmt4(fd.at("statistic").get<double>()) << " ("
            << fmt4(fd.at("p_value").get<double>()) << ")\n";
    }
    {
        const auto& first = j.at("stationarity").front().at("level");
        out << "Note: parentheses hold p-values; deterministic terms: "
            << first.at("spec").get<std::string>() << ".\n\n";
    }

    // ---- lag selection
    const auto& lag = j.at("lag_selection");
    out << "Table 2. VAR lag order selection (common sample T = "
        << lag.at("t_common").get<int>() << ")\n";
    out << pad("Lag", 5) << pad("LogL", 12) << pad("LR", 12) << pad("FPE", 12) << pad("AIC", 10)
        << pad("SC", 10) << "HQ\n";
    for (const auto& r : lag.at("rows")) {
        auto marked = [&](const char* name) {
            for (const auto& m : r.at("marks")) {
                if (m.get<std::string>() == name) return "*";
            }
            return "";
        };
        out << pad(std::to_string(r.at("p").get<int>()), 5)
            << pad(fmt("%.2f", r.at("loglik").get<double>()), 12)
            << pad(r.at("lr").is_null() ? std::string("--")
                                        : fmt4(r.at("lr").get<double>()) + marked("lr"),
                   12)
            << pad(fmt("%.2e", r.at("fpe").get<double>()) + marked("fpe"), 12)
            << pad(fmt4(r.at("aic").get<double>()) + marked("aic"), 10)
            << pad(fmt4(r.at("sc").get<double>()) + marked("sc"), 10)
            << fmt4(r.at("hq").get<double>()) << marked("hq") << "\n";
    }
    out << "Note: * marks the order selected by each criterion; LR is the sequential\n"
           "small-sample likelihood ratio statistic tested at the 5% level.\n\n";

    // ---- stability
    const auto& stab = j.at("stability");
    out << "Table 3. Inverse roots of the AR characteristic polynomial\n";
    out << pad("Root", 26) << "Modulus\n";
    for (const auto& r : stab.at("roots")) {
        out << pad(root_string(r.at("re").get<double>(), r.at("im").get<double>()), 26)
            << fmt("%.6f", r.at("modulus").get<double>()) << "\n";
    }
    out << "Stable: " << (stab.at("stable").get<bool>() ? "yes" : "no")
        << " (VAR(" << j.at("var").at("p").get<int>() << ") on "
        << j.at("var").at("basis").get<std::string>() << ")\n\n";

    // ---- LM
    out << "Table 4. Residual serial correlation LM tests\n";
    out << pad("Lag", 5) << pad("LM stat", 12) << pad("df", 5) << "p-value\n";
    for (const auto& r : j.at("serial_correlation_lm")) {
        out << pad(std::to_string(r.at("lag").get<int>()), 5)
            << pad(fmt4(r.at("statistic").get<double>()), 12)
            << pad(std::to_string(r.at("df").get<int>()), 5)
            << fmt4(r.at("p_value").get<double>()) << "\n";
    }
    out << "\n";

    // ---- Johansen
    const auto& joh = j.at("johansen");
    out << "Table 5. Johansen trace cointegration test (case: "
        << joh.at("case").get<std::string>() << ", VECM lag " << joh.at("vecm_lag").get<int>()
        << ")\n";
    out << pad("Rank", 12) << pad("Eigenvalue", 12) << pad("Trace", 12) << pad("5% CV", 12)
        << "p-value\n";
    for (const auto& r : joh.at("rows")) {
        const int rank = r.at("rank").get<int>();
        out << pad(rank == 0 ? "r = 0" : "r <= " + std::to_string(rank), 12)
            << pad(fmt4(r.at("eigenvalue").get<double>()), 12)
            << pad(fmt4(r.at("trace").get<double>()), 12)
            << pad(fmt4(r.at("cv_5pct").get<double>()), 12)
            << fmt4(r.at("p_value").get<double>()) << "\n";
    }
    out << "Selected cointegration rank at 5%: " << joh.at("selected_rank").get<int>() << "\n\n";

    // ---- causality
    const auto& ty = j.at("causality");
    out << "Table 6. Toda-Yamamoto causality tests (p = " << ty.at("p").get<int>()
        << ", d_max = " << ty.at("d_max").get<int>() << ", mode = "
        << ty.at("mode").get<std::string>() << ")\n";
    std::size_t pair_w = 18;
    for (const auto& t : ty.at("tests")) {
        pair_w = std::max(pair_w, t.at("cause").get<std::string>().size() +
                                      t.at("target").get<std::string>().size() + 6);
    }
    out << pad("Cause -> Target", pair_w) << pad("Chi-sq", 12) << pad("df", 5) << "p-value\n";
    for (const auto& t : ty.at("tests")) {
        out << pad(t.at("cause").get<std::string>() + " -> " + t.at("target").get<std::string>(),
                   pair_w)
            << pad(fmt4(t.at("statistic").get<double>()), 12)
            << pad(std::to_string(t.at("df").get<int>()), 5)
            << fmt4(t.at("p_value").get<double>()) << "\n";
    }
    if (ty.at("d_max_capped").get<bool>()) {
        out << "Warning: no difference order up to the search cap rejected the unit-root\n"
               "null for at least one variable; d_max is the cap, not an estimate.\n";
    }
    out << "\n";
    return out.str();
}

void emit_report(const ReportBundle& bundle, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());

    const ordered_json results = results_json(bundle);
    const ordered_json meta = run_meta_json(bundle);

    auto write = [&](const std::string& name, const std::string& content) {
        const fs::path path = fs::path(out_dir) / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + path.string() + "'");
        out << content;
        if (!out) throw IoError("write failed for '" + path.string() + "'");
    };
    write("results.json", results.dump(2) + "\n");
    write("report.txt", render_report_text(results));
    write("roots.svg", bundle.svg);
    write("run_meta.json", meta.dump(2) + "\n");
}

}  // namespace tsecon
