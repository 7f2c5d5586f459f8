#pragma once

#include "lightframe/frames.hpp"

namespace lightframe {

/// Plate state after an emission or absorption event: recoil speed
/// fraction and final-to-initial rest mass ratio M'/M. Emission leaves
/// mass_ratio < 1, absorption mass_ratio > 1.
struct RecoilSolution {
    Beta beta_recoil;
    double mass_ratio;
};

/// Photon reflection off a finite-mass moving mirror: reflected-to-incident
/// frequency ratio, the finite-mass correction factor (1 for an
/// infinite-mass mirror), and the mirror speed after reflection.
struct MirrorReflection {
    double freq_ratio;
    double gamma_factor;
    Beta beta_after;
};

/// Which conservation system a RecoilSolution belongs to.
enum class ConservationSystem { Emission, Absorption };

/// Signed left-minus-right residuals of a conservation pair, in units of
/// M*c^2 (energy) and M*c (momentum).
struct ResidualPair {
    double energy;
    double momentum;
};

/// Emitting plate, initially at rest: beta_recoil = eps/(1-eps),
/// mass_ratio = sqrt(1-2*eps). Requires a PreEmission epsilon (the < 1/2
/// bound is enforced at Epsilon construction).
RecoilSolution emission_recoil(const Epsilon& eps);

/// Absorbing plate, initially at rest: beta_recoil = eps/(1+eps),
/// mass_ratio = sqrt(1+2*eps).
RecoilSolution absorption_recoil(const Epsilon& eps);

/// Frequency ratio nu_A/nu_S' as a function of the lab-defined parameter:
/// the positive root x of x^2 + 2*eps_lab*x - 1 = 0, i.e.
/// x = sqrt(1+eps_lab^2) - eps_lab. Always in (0, 1].
double invert_frequency(const Epsilon& eps_lab);

/// Reflection of a photon travelling along +y off a mirror moving along
/// +y with speed fraction `beta`; the photon leaves along -y.
/// freq_ratio = ((1-beta)/(1+beta)) * gamma_factor with
/// gamma_factor = (1 + 2*eps_i*sqrt((1-beta)/(1+beta)))^(-1); the
/// post-reflection mirror speed is recovered from momentum conservation,
/// so the returned triple is internally consistent by construction.
MirrorReflection mirror_reflection(const Epsilon& eps_i, Beta beta);

/// Diagnostic: substitutes an emission/absorption solution back into its
/// conservation pair. Exact closed forms give residuals at rounding level.
ResidualPair conservation_residuals(ConservationSystem system,
                                    const Epsilon& eps,
                                    const RecoilSolution& solution);

/// Diagnostic for the mirror-reflection system; `beta_before` is the
/// mirror speed fraction before the photon arrives.
ResidualPair conservation_residuals(const Epsilon& eps_i, Beta beta_before,
                                    const MirrorReflection& solution);

}  // namespace lightframe
