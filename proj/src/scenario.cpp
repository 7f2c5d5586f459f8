#include "lightframe/scenario.hpp"

#include <cmath>
#include <string>

namespace lightframe {

namespace {

void require_tau_hat(double tau_hat) {
    if (!std::isfinite(tau_hat) || tau_hat < 0.0) {
        throw InvalidInput("tau_hat must be >= 0, got " +
                           std::to_string(tau_hat));
    }
}

/// y(t) = y0 + slope * (t - t0)
struct Worldline {
    double t0;
    double y0;
    double slope;
};

double intersection_time(const Worldline& a, const Worldline& b) {
    const double a0 = a.y0 - a.slope * a.t0;
    const double b0 = b.y0 - b.slope * b.t0;
    return (b0 - a0) / (a.slope - b.slope);
}

ScenarioResult assemble(const Epsilon& eps_pre, Beta beta_u, double tau_hat,
                        double eps_lab_value) {
    const double e = eps_pre.value();
    const double recoil = std::sqrt(1.0 - 2.0 * e);

    const double f_eps = (1.0 - e) / (1.0 - 2.0 * e);
    const double g_eps =
        ((1.0 - e) * (1.0 + 2.0 * e)) / ((1.0 + e) * (1.0 - 2.0 * e));

    const double dt_A = 2.0 * f_eps + tau_hat * g_eps;
    const double dt_S = lorentz_factor(beta_u) * dt_A;
    const double dt_SPrime =
        dt_A / lorentz_factor(emission_recoil(eps_pre).beta_recoil);

    const double contraction_ratio = recoil / (1.0 - e);
    const double el = eps_lab_value;
    const double correction_factor = 1.0 / std::sqrt(1.0 + el * el);

    return ScenarioResult{dt_A,   dt_S,  dt_SPrime, contraction_ratio,
                          correction_factor, f_eps, g_eps, eps_pre};
}

}  // namespace

RiseIntervals rise_intervals(const Epsilon& eps, Beta beta_u) {
    const IntervalTriple in_A{0.0, 1.0, 1.0, FrameLabel::A};

    // S' recoils toward -y relative to A, S moves at -u along x.
    const Beta recede(-emission_recoil(eps).beta_recoil.value());
    const IntervalTriple in_SPrime =
        boost_interval(in_A, recede, BoostAxis::Y, FrameLabel::SPrime);
    const IntervalTriple in_S = boost_interval(
        in_A, Beta(-beta_u.value()), BoostAxis::X, FrameLabel::S);

    return RiseIntervals{in_A, in_SPrime, in_S};
}

Epsilon no_dilation_condition(Beta beta_u) {
    const double b = beta_u.value();
    return Epsilon::pre_emission(b * b / 2.0);
}

double descent_time(const Epsilon& eps, double tau_hat) {
    if (eps.kind() != EpsilonKind::PreEmission) {
        throw InvalidInput("descent_time needs a pre-emission energy ratio");
    }
    require_tau_hat(tau_hat);
    const double e = eps.value();
    return 1.0 / (1.0 - 2.0 * e) +
           2.0 * e * tau_hat / ((1.0 + e) * (1.0 - 2.0 * e));
}

ScenarioResult total_times(const DimensionlessParams& params) {
    const double eps_lab = params.eps_lab().value();
    const double x = invert_frequency(params.eps_lab());
    // eps < 1/2 for every finite eps_lab; construction asserts it.
    const Epsilon eps_pre = Epsilon::pre_emission(eps_lab * x);
    return assemble(eps_pre, params.beta_u(), params.tau_hat(), eps_lab);
}

ScenarioResult total_times(const Epsilon& eps_pre, Beta beta_u,
                           double tau_hat) {
    if (eps_pre.kind() != EpsilonKind::PreEmission) {
        throw InvalidInput("total_times needs a pre-emission energy ratio");
    }
    require_tau_hat(tau_hat);
    // Invert the Doppler relation: eps = eps_lab * sqrt(1 - 2*eps).
    const double e = eps_pre.value();
    const double eps_lab = e / std::sqrt(1.0 - 2.0 * e);
    return assemble(eps_pre, beta_u, tau_hat, eps_lab);
}

double trace_total_time(const Epsilon& eps, double tau_hat) {
    if (eps.kind() != EpsilonKind::PreEmission) {
        throw InvalidInput("trace_total_time needs a pre-emission energy ratio");
    }
    require_tau_hat(tau_hat);

    const RecoilSolution lower = emission_recoil(eps);
    const RecoilSolution upper = absorption_recoil(eps);

    // Emission at t = 0, y = 0. The lower plate recedes toward -y from
    // that moment on; the mirror sits at y = 1 until the photon arrives.
    const Worldline photon_up{0.0, 0.0, 1.0};
    const Worldline mirror_at_rest{0.0, 1.0, 0.0};
    const double t_absorb = intersection_time(photon_up, mirror_at_rest);

    // During the dwell the mirror carries the photon upward.
    const Worldline mirror_recoiling{t_absorb, 1.0, upper.beta_recoil.value()};
    const double t_reemit = t_absorb + tau_hat;
    const double y_reemit =
        mirror_recoiling.y0 +
        mirror_recoiling.slope * (t_reemit - mirror_recoiling.t0);

    const Worldline photon_down{t_reemit, y_reemit, -1.0};
    const Worldline lower_plate{0.0, 0.0, -lower.beta_recoil.value()};
    return intersection_time(photon_down, lower_plate);
}

double correction_factor_minus_one(double eps_lab) {
    if (!std::isfinite(eps_lab) || eps_lab < 0.0) {
        throw InvalidInput("eps_lab must be >= 0, got " +
                           std::to_string(eps_lab));
    }
    // (1 + e^2)^(-1/2) - 1 without forming the near-1 intermediate.
    return std::expm1(-0.5 * std::log1p(eps_lab * eps_lab));
}

}  // namespace lightframe
