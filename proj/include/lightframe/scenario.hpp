#pragma once

#include "lightframe/conservation.hpp"
#include "lightframe/lorentz.hpp"

namespace lightframe {

/// The photon-rise interval (emission at the lower plate, absorption at
/// the mirror) expressed in each of the three frames. in_A is (0, 1, 1)
/// by construction, in units of L and L/c.
struct RiseIntervals {
    IntervalTriple in_A;
    IntervalTriple in_SPrime;
    IntervalTriple in_S;
};

/// Total elapsed times for the full bounce (emission at the lower plate
/// until reabsorption there) plus the two equivalent contraction laws.
struct ScenarioResult {
    double dt_A;               ///< total time in A, units of L/c
    double dt_S;               ///< total time in S
    double dt_SPrime;          ///< total time in S'
    double contraction_ratio;  ///< dt_S' * gamma_u / dt_S = sqrt(1-2e)/(1-e)
    double correction_factor;  ///< 1/sqrt(1 + eps_lab^2), equal to the above
    double f_eps;              ///< (1-e)/(1-2e), photon-flight dilation
    double g_eps;              ///< (1+e-2e^2)/(1-e-2e^2), dwell dilation
    Epsilon eps_pre;           ///< the pre-emission ratio connecting the laws
};

/// Rise interval in A, S' and S. S' sees the interval stretched by the
/// recoil factor, S by the horizontal boost only.
RiseIntervals rise_intervals(const Epsilon& eps, Beta beta_u);

/// The pre-emission ratio at which recoil exactly cancels the horizontal
/// dilation: eps = beta_u^2 / 2 makes gamma_u * sqrt(1-2*eps) = 1.
Epsilon no_dilation_condition(Beta beta_u);

/// Frame-A time for the photon's descent from the mirror back to the
/// receding lower plate: 1/(1-2e) + 2e*tau_hat/((1+e)(1-2e)).
double descent_time(const Epsilon& eps, double tau_hat);

/// Full scenario from the lab-defined parameterization. The pre-emission
/// ratio is obtained internally via invert_frequency.
ScenarioResult total_times(const DimensionlessParams& params);

/// Full scenario from a directly supplied pre-emission ratio. Connected
/// to the lab-defined entry point by invert_frequency; the two agree
/// whenever eps = eps_lab * invert_frequency(eps_lab).
ScenarioResult total_times(const Epsilon& eps_pre, Beta beta_u,
                           double tau_hat);

/// Independent cross-check of the analytic dt_A: builds the explicit
/// worldlines in frame A (receding lower plate, mirror at rest then
/// recoiling during the dwell, photon up then down) and solves the
/// photon-plate intersections in closed linear form. No discretization.
double trace_total_time(const Epsilon& eps, double tau_hat);

/// correction_factor - 1 evaluated without cancellation, so that the
/// deviation is resolvable even when eps_lab^2 is below machine epsilon.
double correction_factor_minus_one(double eps_lab);

}  // namespace lightframe
