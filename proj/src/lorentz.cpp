#include "lightframe/lorentz.hpp"

#include <cmath>
#include <string>

namespace lightframe {

IntervalTriple boost_interval(const IntervalTriple& iv, Beta beta,
                              BoostAxis axis, FrameLabel target) {
    if (iv.frame == target) {
        throw FrameMismatch(std::string("interval is already in frame ") +
                            frame_name(target));
    }

    const double b = beta.value();
    const double g = lorentz_factor(beta);

    IntervalTriple out = iv;
    out.frame = target;
    if (axis == BoostAxis::X) {
        out.dx = g * (iv.dx - b * iv.dt);
        out.dt = g * (iv.dt - b * iv.dx);
    } else {
        out.dy = g * (iv.dy - b * iv.dt);
        out.dt = g * (iv.dt - b * iv.dy);
    }
    return out;
}

double doppler_longitudinal(double freq_ratio_in, Beta beta_sep) {
    const double b = beta_sep.value();
    return freq_ratio_in * std::sqrt((1.0 - b) / (1.0 + b));
}

}  // namespace lightframe
