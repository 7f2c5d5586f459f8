#include "lightframe/conservation.hpp"

#include <cmath>

namespace lightframe {

namespace {

void require_kind(const Epsilon& eps, EpsilonKind kind, const char* what) {
    if (eps.kind() != kind) {
        throw InvalidInput(std::string(what) +
                           ": epsilon has the wrong kind for this system");
    }
}

}  // namespace

RecoilSolution emission_recoil(const Epsilon& eps) {
    require_kind(eps, EpsilonKind::PreEmission, "emission_recoil");
    const double e = eps.value();
    return RecoilSolution{Beta(e / (1.0 - e)), std::sqrt(1.0 - 2.0 * e)};
}

RecoilSolution absorption_recoil(const Epsilon& eps) {
    require_kind(eps, EpsilonKind::PreEmission, "absorption_recoil");
    const double e = eps.value();
    return RecoilSolution{Beta(e / (1.0 + e)), std::sqrt(1.0 + 2.0 * e)};
}

double invert_frequency(const Epsilon& eps_lab) {
    require_kind(eps_lab, EpsilonKind::LabDefined, "invert_frequency");
    const double e = eps_lab.value();
    // sqrt(1+e^2) - e, written cancellation-free for large e.
    return 1.0 / (std::sqrt(1.0 + e * e) + e);
}

MirrorReflection mirror_reflection(const Epsilon& eps_i, Beta beta) {
    require_kind(eps_i, EpsilonKind::Incident, "mirror_reflection");
    const double ei = eps_i.value();
    const double b = beta.value();

    const double classical_ratio = (1.0 - b) / (1.0 + b);
    const double gamma_factor =
        1.0 / (1.0 + 2.0 * ei * std::sqrt(classical_ratio));
    const double freq_ratio = classical_ratio * gamma_factor;

    // Momentum balance in units of M*c: the mirror absorbs the incident
    // photon's momentum and the recoil of the reflected one.
    const double er = ei * freq_ratio;
    const double p_before = b * lorentz_factor(beta);
    const double p_after = ei + er + p_before;
    const double beta_after = p_after / std::sqrt(1.0 + p_after * p_after);

    return MirrorReflection{freq_ratio, gamma_factor, Beta(beta_after)};
}

ResidualPair conservation_residuals(ConservationSystem system,
                                    const Epsilon& eps,
                                    const RecoilSolution& solution) {
    const double e = eps.value();
    const double m = solution.mass_ratio;
    const double g = lorentz_factor(solution.beta_recoil);
    const double b = solution.beta_recoil.value();

    if (system == ConservationSystem::Emission) {
        // M c^2 = M' gamma c^2 + h nu   and   h nu / c = M' gamma V
        return ResidualPair{1.0 - (m * g + e), e - m * g * b};
    }
    // h nu + M c^2 = M' gamma c^2   and   h nu / c = M' gamma V
    return ResidualPair{(e + 1.0) - m * g, e - m * g * b};
}

ResidualPair conservation_residuals(const Epsilon& eps_i, Beta beta_before,
                                    const MirrorReflection& solution) {
    require_kind(eps_i, EpsilonKind::Incident, "conservation_residuals");
    const double ei = eps_i.value();
    const double er = ei * solution.freq_ratio;
    const double g0 = lorentz_factor(beta_before);
    const double b0 = beta_before.value();
    const double g1 = lorentz_factor(solution.beta_after);
    const double b1 = solution.beta_after.value();

    // h nu_i + M gamma c^2 = M gamma' c^2 + h nu_r
    // h nu_i / c + M gamma v = M gamma' v' - h nu_r / c
    return ResidualPair{(ei + g0) - (g1 + er),
                        (ei + b0 * g0) - (b1 * g1 - er)};
}

}  // namespace lightframe
