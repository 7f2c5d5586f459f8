#include "lightframe/report.hpp"

#include <algorithm>
#include <cmath>

namespace lightframe {

namespace {

std::string csv_row(double eps_lab, double beta_u,
                    const ScenarioResult& result) {
    std::string row;
    row += format_number(eps_lab);
    row += ',';
    row += format_number(result.eps_pre.value());
    row += ',';
    row += format_number(beta_u);
    row += ',';
    row += format_number(result.dt_A);
    row += ',';
    row += format_number(result.dt_S);
    row += ',';
    row += format_number(result.dt_SPrime);
    row += ',';
    row += format_number(result.contraction_ratio);
    row += ',';
    row += format_number(result.correction_factor);
    row += '\n';
    return row;
}

std::vector<double> eps_grid(const SweepSpec& spec) {
    if (spec.eps_min == spec.eps_max) {
        return {spec.eps_min};
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(spec.eps_steps));
    const int last = spec.eps_steps - 1;
    if (spec.scale == SweepSpec::Scale::Linear) {
        const double step = (spec.eps_max - spec.eps_min) / last;
        for (int i = 0; i < last; ++i) grid.push_back(spec.eps_min + i * step);
    } else {
        const double log_min = std::log(spec.eps_min);
        const double step = (std::log(spec.eps_max) - log_min) / last;
        for (int i = 0; i < last; ++i) grid.push_back(std::exp(log_min + i * step));
    }
    grid.push_back(spec.eps_max);
    return grid;
}

void validate_sweep(const SweepSpec& spec) {
    if (!std::isfinite(spec.eps_min) || spec.eps_min < 0.0) {
        throw ConfigError("eps_min must be >= 0");
    }
    if (!std::isfinite(spec.eps_max) || spec.eps_max < spec.eps_min) {
        throw ConfigError("eps_max must be >= eps_min");
    }
    if (spec.eps_steps < 2) {
        throw ConfigError("eps_steps must be >= 2");
    }
    if (spec.beta_values.empty()) {
        throw ConfigError("at least one beta value is required");
    }
    if (spec.scale == SweepSpec::Scale::Log && spec.eps_min <= 0.0) {
        throw ConfigError("log scale requires eps_min > 0");
    }
}

[[noreturn]] void rethrow_with_row(const Error& error, double eps_lab,
                                   double beta_u) {
    const std::string message = "sweep row (eps_lab = " +
                                format_number(eps_lab) + ", beta_u = " +
                                format_number(beta_u) + "): " + error.what();
    if (dynamic_cast<const SuperluminalBoost*>(&error)) {
        throw SuperluminalBoost(message);
    }
    if (dynamic_cast<const PhotonTooEnergetic*>(&error)) {
        throw PhotonTooEnergetic(message);
    }
    if (dynamic_cast<const FrameMismatch*>(&error)) {
        throw FrameMismatch(message);
    }
    throw InvalidInput(message);
}

}  // namespace

std::string csv_header() {
    return "eps_lab,eps_pre,beta_u,dt_A,dt_S,dt_Sprime,contraction_ratio,"
           "correction_factor\n";
}

SingleRunOutput run_single(const ScenarioConfig& config) {
    const DimensionlessParams params = params_from_config(config);
    const ScenarioResult result = total_times(params);

    const double eps_lab = params.eps_lab().value();
    const double beta_u = params.beta_u().value();
    const double gamma_u = lorentz_factor(params.beta_u());
    const double rise_dilation =
        gamma_u * std::sqrt(1.0 - 2.0 * result.eps_pre.value());

    std::string report = "# scenario report (times in units of L/c)\n";
    report += serialize_config(config);
    report += "#\n";
    const auto line = [&report](std::string_view name, double value) {
        report += "# ";
        report += name;
        report += " = ";
        report += format_number(value);
        report += '\n';
    };
    line("eps_lab           ", eps_lab);
    line("eps_pre           ", result.eps_pre.value());
    line("beta_u            ", beta_u);
    line("tau_hat           ", params.tau_hat());
    line("gamma_u           ", gamma_u);
    line("rise_dilation     ", rise_dilation);
    line("dt_A              ", result.dt_A);
    line("dt_S              ", result.dt_S);
    line("dt_S_prime        ", result.dt_SPrime);
    line("rigid_baseline    ", result.dt_S / gamma_u);
    line("contraction_ratio ", result.contraction_ratio);
    line("correction_factor ", result.correction_factor);
    line("correction_minus_1", correction_factor_minus_one(eps_lab));

    return SingleRunOutput{report, csv_header() + csv_row(eps_lab, beta_u, result)};
}

std::string run_sweep(const SweepSpec& spec, const ScenarioConfig& base) {
    validate_sweep(spec);
    const DimensionlessParams base_params = params_from_config(base);
    const double tau_hat = base_params.tau_hat();

    std::vector<double> betas = spec.beta_values;
    std::sort(betas.begin(), betas.end());

    std::string csv = csv_header();
    for (const double eps : eps_grid(spec)) {
        for (const double beta : betas) {
            try {
                const DimensionlessParams params(Epsilon::lab_defined(eps),
                                                 Beta(beta), tau_hat);
                csv += csv_row(eps, beta, total_times(params));
            } catch (const Error& error) {
                rethrow_with_row(error, eps, beta);
            }
        }
    }
    return csv;
}

}  // namespace lightframe
