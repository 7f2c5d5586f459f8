#pragma once

#include "lightframe/errors.hpp"

namespace lightframe {

namespace constants {

/// Rest energy of one unified atomic mass unit, in electron-volts
/// (CODATA value pinned to 6 significant figures).
inline constexpr double amu_rest_energy_ev = 931.494e6;

/// Speed of light in vacuum, m/s (exact SI definition).
inline constexpr double speed_of_light_m_per_s = 299792458.0;

}  // namespace constants

/// Dimensionless velocity fraction v/c of a massive body. Always
/// satisfies |value| < 1; photon directions are never represented as
/// Beta = +-1.
class Beta {
public:
    constexpr Beta() noexcept = default;

    /// Throws SuperluminalBoost if |value| >= 1, InvalidInput if not finite.
    explicit Beta(double value);

    double value() const noexcept { return value_; }

private:
    double value_ = 0.0;
};

/// Which photon-energy-to-rest-energy ratio an Epsilon value carries.
/// The three ratios share one algebraic role but have different domains
/// and must never be conflated.
enum class EpsilonKind {
    PreEmission,  ///< h*nu_A / M*c^2, bounded in [0, 1/2)
    LabDefined,   ///< h*nu_S' / M*c^2, unbounded above
    Incident,     ///< h*nu_i / M*c^2, unbounded above
};

/// Photon energy over plate rest energy, tagged with its kind.
/// value = 0 is admitted as the exact infinite-mass limit.
class Epsilon {
public:
    static Epsilon pre_emission(double value);
    static Epsilon lab_defined(double value);
    static Epsilon incident(double value);

    double value() const noexcept { return value_; }
    EpsilonKind kind() const noexcept { return kind_; }

private:
    Epsilon(double value, EpsilonKind kind) noexcept
        : value_(value), kind_(kind) {}

    double value_;
    EpsilonKind kind_;
};

/// The three reference frames of the model: S (external inertial),
/// S' (lower plate), A (auxiliary, co-moving horizontally with the plates).
enum class FrameLabel { S, SPrime, A };

const char* frame_name(FrameLabel label) noexcept;

/// Scenario inputs in physical units.
struct PhysicalInputs {
    double plate_rest_mass_amu;   ///< M, unified atomic mass units
    double photon_energy_ev;      ///< h*nu_S', electron-volts
    double plate_separation_m;    ///< L, meters
    Beta boost_speed_fraction;    ///< u/c
    double lifetime_s;            ///< tau_A, seconds
};

/// The scenario's full physics in pure numbers. Internally everything is
/// dimensionless: velocities as v/c, energies as ratios to M*c^2, times
/// in units of L/c, lengths in units of L.
class DimensionlessParams {
public:
    /// eps_lab must be LabDefined, beta_u in [0, 1), tau_hat >= 0.
    DimensionlessParams(Epsilon eps_lab, Beta beta_u, double tau_hat);

    const Epsilon& eps_lab() const noexcept { return eps_lab_; }
    Beta beta_u() const noexcept { return beta_u_; }
    double tau_hat() const noexcept { return tau_hat_; }

private:
    Epsilon eps_lab_;
    Beta beta_u_;
    double tau_hat_;
};

/// Lorentz factor gamma = (1 - beta^2)^(-1/2). Always >= 1.
double lorentz_factor(Beta beta);

/// Reduces physical inputs to the dimensionless parameters everything
/// downstream consumes: eps_lab = E_photon / (M c^2), tau_hat = tau c / L.
DimensionlessParams to_dimensionless(const PhysicalInputs& inputs);

}  // namespace lightframe
