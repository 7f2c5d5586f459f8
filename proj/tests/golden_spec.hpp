#pragma once

// The pinned sweep used by the golden-file determinism checks. The CSV it
// produces is checked into tests/golden/sweep_baseline.csv; the CLI process
// test drives the same grid through the binary.

#include <string>

#include "lightframe/config.hpp"

namespace golden {

inline lightframe::ScenarioConfig base_config() {
    lightframe::ScenarioConfig config;
    config.mode = lightframe::ConfigMode::Dimensionless;
    config.eps_lab = 0.0;
    config.beta_u = 0.0;
    config.tau_hat = 0.25;
    return config;
}

inline lightframe::SweepSpec sweep_spec() {
    lightframe::SweepSpec spec;
    spec.eps_min = 0.0;
    spec.eps_max = 0.45;
    spec.eps_steps = 3;
    spec.beta_values = {0.0, 0.6};
    spec.scale = lightframe::SweepSpec::Scale::Linear;
    return spec;
}

inline std::string baseline_path() {
    return std::string(LIGHTFRAME_GOLDEN_DIR) + "/sweep_baseline.csv";
}

}  // namespace golden
