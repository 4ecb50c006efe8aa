#pragma once

#include <cstdint>
#include <string>

#include "tsecon/config.hpp"

namespace tsecon {

// Synthetic demonstration dataset: three independent random walks around
// positive levels, two of them overlaid with a fixed multiplicative monthly
// pattern so the seasonal-adjustment stage has something to remove. Output
// is byte-deterministic for a given seed.
std::string demo_csv_text(std::uint64_t seed, int months = 157);

// Runnable pipeline configuration pointing at a demo CSV.
PipelineConfig demo_config(const std::string& csv_path, const std::string& out_dir,
                           std::uint64_t seed);

struct DemoFiles {
    std::string csv_path;
    std::string config_path;
};

// Writes demo_data.csv and demo_config.cfg into `dir`.
DemoFiles write_demo(const std::string& dir, std::uint64_t seed, int months = 157);

inline constexpr std::uint64_t kDemoSeed = 20030113;

}  // namespace tsecon
