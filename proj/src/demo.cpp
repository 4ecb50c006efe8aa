#include "tsecon/demo.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tsecon/rng.hpp"
#include "tsecon/series.hpp"

namespace tsecon {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Monthly factor patterns; each multiplies to one over a calendar year.
double export_factor(int month) { return std::exp(0.08 * std::sin(kTwoPi * month / 12.0)); }
double import_factor(int month) { return std::exp(0.06 * std::cos(kTwoPi * month / 12.0)); }

}  // namespace

std::string demo_csv_text(std::uint64_t seed, int months) {
    if (months < 48) throw DomainError("demo data needs at least 48 months");
    GaussianRng g_dk(derive_seed(seed, 0));
    GaussianRng g_ihr(derive_seed(seed, 1));
    GaussianRng g_ith(derive_seed(seed, 2));

    std::ostringstream out;
    out << "date,DK,IHR,ITH\n";
    Period period{2003, 1};
    double dk = 100.0, ihr = 120.0, ith = 90.0;
    char buf[128];
    for (int t = 0; t < months; ++t) {
        dk += 0.8 * g_dk.next();
        ihr += 1.0 * g_ihr.next();
        ith += 0.9 * g_ith.next();
        const int m = period.month - 1;
        std::snprintf(buf, sizeof(buf), "%s,%.6f,%.6f,%.6f\n", period.to_string().c_str(), dk,
                      ihr * export_factor(m), ith * import_factor(m));
        out << buf;
        period = period.plus(1);
    }
    return out.str();
}

PipelineConfig demo_config(const std::string& csv_path, const std::string& out_dir,
                           std::uint64_t seed) {
    PipelineConfig cfg;
    cfg.input_path = csv_path;
    cfg.variables = {"DK", "IHR", "ITH"};
    cfg.transforms["DK"] = TransformSpec{};
    cfg.transforms["IHR"] = TransformSpec{false, true};
    cfg.transforms["ITH"] = TransformSpec{false, true};
    cfg.adf_spec = Deterministic::Constant;
    cfg.adf_policy = LagPolicy::auto_schwarz();
    cfg.max_p = 8;
    cfg.var_basis = VarBasis::Levels;
    cfg.johansen_case = JohansenCase::RestrictedConstant;
    cfg.vecm_lag = -1;
    cfg.ty_dmax = -1;
    cfg.ty_mode = RestrictionMode::FirstP;
    cfg.alpha = 0.05;
    cfg.output_dir = out_dir;
    cfg.seed = seed;
    return cfg;
}

DemoFiles write_demo(const std::string& dir, std::uint64_t seed, int months) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory '" + dir + "': " + ec.message());

    DemoFiles files;
    files.csv_path = (fs::path(dir) / "demo_data.csv").string();
    files.config_path = (fs::path(dir) / "demo_config.cfg").string();

    {
        std::ofstream out(files.csv_path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + files.csv_path + "'");
        out << demo_csv_text(seed, months);
    }
    {
        const PipelineConfig cfg =
            demo_config(files.csv_path, (fs::path(dir) / "out").string(), seed);
        std::ofstream out(files.config_path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + files.config_path + "'");
        out << config_to_text(cfg);
    }
    return files;
}

}  // namespace tsecon
