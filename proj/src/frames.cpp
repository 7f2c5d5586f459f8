#include "lightframe/frames.hpp"

#include <cmath>
#include <string>

namespace lightframe {

namespace {

std::string fmt(double v) { return std::to_string(v); }

}  // namespace

Beta::Beta(double value) {
    if (!std::isfinite(value)) {
        throw InvalidInput("velocity fraction must be finite, got " + fmt(value));
    }
    if (std::abs(value) >= 1.0) {
        throw SuperluminalBoost("|v/c| must be < 1 for a massive body, got " +
                                fmt(value));
    }
    value_ = value;
}

Epsilon Epsilon::pre_emission(double value) {
    if (!std::isfinite(value) || value < 0.0) {
        throw InvalidInput("pre-emission energy ratio must be >= 0, got " +
                           fmt(value));
    }
    if (value >= 0.5) {
        throw PhotonTooEnergetic(
            "pre-emission energy ratio must be < 1/2 (emitter rest mass would "
            "not stay real), got " +
            fmt(value));
    }
    return Epsilon(value, EpsilonKind::PreEmission);
}

Epsilon Epsilon::lab_defined(double value) {
    if (!std::isfinite(value) || value < 0.0) {
        throw InvalidInput("lab-defined energy ratio must be >= 0, got " +
                           fmt(value));
    }
    return Epsilon(value, EpsilonKind::LabDefined);
}

Epsilon Epsilon::incident(double value) {
    if (!std::isfinite(value) || value < 0.0) {
        throw InvalidInput("incident energy ratio must be >= 0, got " +
                           fmt(value));
    }
    return Epsilon(value, EpsilonKind::Incident);
}

const char* frame_name(FrameLabel label) noexcept {
    switch (label) {
        case FrameLabel::S:      return "S";
        case FrameLabel::SPrime: return "S'";
        case FrameLabel::A:      return "A";
    }
    return "?";
}

DimensionlessParams::DimensionlessParams(Epsilon eps_lab, Beta beta_u,
                                         double tau_hat)
    : eps_lab_(eps_lab), beta_u_(beta_u), tau_hat_(tau_hat) {
    if (eps_lab_.kind() != EpsilonKind::LabDefined) {
        throw InvalidInput("eps_lab must be a lab-defined energy ratio");
    }
    if (beta_u_.value() < 0.0) {
        throw InvalidInput("beta_u must be in [0, 1), got " +
                           fmt(beta_u_.value()));
    }
    if (!std::isfinite(tau_hat_) || tau_hat_ < 0.0) {
        throw InvalidInput("tau_hat must be >= 0, got " + fmt(tau_hat_));
    }
}

double lorentz_factor(Beta beta) {
    // (1 - b)(1 + b) keeps full precision as |b| -> 1, where 1 - b*b loses
    // ~half the significand to cancellation.
    const double b = beta.value();
    return 1.0 / std::sqrt((1.0 - b) * (1.0 + b));
}

DimensionlessParams to_dimensionless(const PhysicalInputs& inputs) {
    if (!std::isfinite(inputs.plate_rest_mass_amu) ||
        inputs.plate_rest_mass_amu <= 0.0) {
        throw InvalidInput("plate rest mass must be > 0, got " +
                           fmt(inputs.plate_rest_mass_amu));
    }
    if (!std::isfinite(inputs.plate_separation_m) ||
        inputs.plate_separation_m <= 0.0) {
        throw InvalidInput("plate separation must be > 0, got " +
                           fmt(inputs.plate_separation_m));
    }
    if (!std::isfinite(inputs.photon_energy_ev) ||
        inputs.photon_energy_ev <= 0.0) {
        throw InvalidInput("photon energy must be > 0, got " +
                           fmt(inputs.photon_energy_ev));
    }
    if (!std::isfinite(inputs.lifetime_s) || inputs.lifetime_s < 0.0) {
        throw InvalidInput("lifetime must be >= 0, got " + fmt(inputs.lifetime_s));
    }

    const double rest_energy_ev =
        inputs.plate_rest_mass_amu * constants::amu_rest_energy_ev;
    const double eps_lab = inputs.photon_energy_ev / rest_energy_ev;
    const double tau_hat = inputs.lifetime_s *
                           constants::speed_of_light_m_per_s /
                           inputs.plate_separation_m;

    return DimensionlessParams(Epsilon::lab_defined(eps_lab),
                               inputs.boost_speed_fraction, tau_hat);
}

}  // namespace lightframe
