#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lightframe/frames.hpp"

namespace lightframe {

enum class ConfigMode { Dimensionless, Si };

/// One scenario, as read from a config file. Dimensionless mode supplies
/// (eps_lab, tau_hat) directly; SI mode supplies physical inputs and the
/// ratios are derived. Mixing keys across modes is rejected.
struct ScenarioConfig {
    ConfigMode mode = ConfigMode::Dimensionless;
    std::optional<double> eps_lab;
    std::optional<double> mass_amu;
    std::optional<double> photon_energy_ev;
    double beta_u = 0.0;
    std::optional<double> tau_hat;
    std::optional<double> lifetime_s;
    std::optional<double> plate_separation_m;

    bool operator==(const ScenarioConfig&) const = default;
};

/// A sweep over the lab-defined parameter crossed with a list of boosts.
struct SweepSpec {
    enum class Scale { Linear, Log };

    double eps_min = 0.0;
    double eps_max = 0.0;
    int eps_steps = 2;
    std::vector<double> beta_values;
    Scale scale = Scale::Linear;
};

/// Parses the line-based `key = value` format: `#` starts a comment that
/// runs to end of line, blank lines are ignored, keys are exactly the
/// ScenarioConfig field names, values are decimal literals (scientific
/// notation permitted) or bare enum words. Duplicate keys are last-wins
/// with a warning on `diagnostics` when given.
///
/// Throws ParseError (with line number) for unknown keys and malformed
/// values, ConfigError for missing or conflicting keys.
ScenarioConfig parse_config(std::string_view text,
                            std::ostream* diagnostics = nullptr);

/// Emits a config document that parse_config maps back to `config`
/// exactly. This is also the report's config-echo section.
std::string serialize_config(const ScenarioConfig& config);

/// Converts a valid config to the dimensionless parameter set, applying
/// the SI reduction when needed.
DimensionlessParams params_from_config(const ScenarioConfig& config);

/// Serializes with 17 significant digits (lossless for 64-bit floats),
/// locale-independent, `.` decimal point.
std::string format_number(double value);

}  // namespace lightframe
