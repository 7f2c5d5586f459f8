#pragma once

#include "lightframe/frames.hpp"

namespace lightframe {

/// Space-time interval between two events, expressed in one named frame.
/// Lengths in units of L, time in units of L/c. The Minkowski norm
/// dt^2 - dx^2 - dy^2 is boost-invariant (property-tested, not stored).
struct IntervalTriple {
    double dx;
    double dy;
    double dt;
    FrameLabel frame;
};

/// Boost axis. The scenario uses X for S <-> A and Y for A <-> S'.
enum class BoostAxis { X, Y };

/// Boosts an interval into `target`. `beta` is the velocity of the target
/// frame along +axis as measured in iv.frame. Along the boost axis
/// (dr, dt) -> (gamma*(dr - beta*dt), gamma*(dt - beta*dr)); the
/// transverse component is unchanged.
///
/// Throws FrameMismatch when target == iv.frame: a frame never boosts
/// into itself, so that call is always a bookkeeping bug.
IntervalTriple boost_interval(const IntervalTriple& iv, Beta beta,
                              BoostAxis axis, FrameLabel target);

/// Longitudinal relativistic Doppler map. `beta_sep` > 0 means source and
/// detector are separating; the returned ratio is then redshifted:
/// freq_ratio_in * sqrt((1 - beta_sep) / (1 + beta_sep)).
double doppler_longitudinal(double freq_ratio_in, Beta beta_sep);

}  // namespace lightframe
