#pragma once

#include <string>

#include "lightframe/config.hpp"
#include "lightframe/scenario.hpp"

namespace lightframe {

/// run_single output: a human-readable report whose config-echo section
/// (in fact the whole document) parses back to the input config, plus the
/// same scenario as a one-row CSV document.
struct SingleRunOutput {
    std::string report;
    std::string csv;
};

/// The fixed CSV column set shared by single runs and sweeps.
std::string csv_header();

/// Runs one scenario and formats the result.
SingleRunOutput run_single(const ScenarioConfig& config);

/// Runs an (eps_lab, beta_u) grid over `base` and returns the CSV
/// document: header row, then rows ordered by eps_lab then beta_u,
/// 17 significant digits, LF newlines. A failing row aborts the sweep
/// with the row named in the error message.
std::string run_sweep(const SweepSpec& spec, const ScenarioConfig& base);

}  // namespace lightframe
