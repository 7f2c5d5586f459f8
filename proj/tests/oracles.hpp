#pragma once

// Independent numeric oracles used by the test suites. Everything here
// re-derives results from the raw conservation equations or from direct
// matrix arithmetic; nothing calls into the library's closed forms.

#include <cmath>
#include <stdexcept>

namespace oracle {

/// Bisection for a monotone sign-changing function. Terminates when the
/// bracket width drops below 1e-14.
template <typename Fn>
double bisect(Fn&& f, double lo, double hi) {
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw std::logic_error("bisect: no sign change over the bracket");
    }
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct RecoilRoot {
    double beta;
    double mass_ratio;
};

/// Solves the emission conservation pair for (V, M'/M) numerically:
///   M c^2 = M' gamma c^2 + h nu      (energy, fixes M' given V)
///   h nu / c = M' gamma V            (momentum, bisected on V)
inline RecoilRoot solve_emission(double eps) {
    const auto mass_from_energy = [eps](double v) {
        return (1.0 - eps) * std::sqrt(1.0 - v * v);
    };
    const auto momentum_residual = [&](double v) {
        const double gamma = 1.0 / std::sqrt(1.0 - v * v);
        return eps - mass_from_energy(v) * gamma * v;
    };
    const double v = bisect(momentum_residual, 0.0, 1.0 - 1e-15);
    return RecoilRoot{v, mass_from_energy(v)};
}

/// Same treatment for the absorption pair:
///   h nu + M c^2 = M' gamma c^2
///   h nu / c = M' gamma V
inline RecoilRoot solve_absorption(double eps) {
    const auto mass_from_energy = [eps](double v) {
        return (1.0 + eps) * std::sqrt(1.0 - v * v);
    };
    const auto momentum_residual = [&](double v) {
        const double gamma = 1.0 / std::sqrt(1.0 - v * v);
        return eps - mass_from_energy(v) * gamma * v;
    };
    const double v = bisect(momentum_residual, 0.0, 1.0 - 1e-15);
    return RecoilRoot{v, mass_from_energy(v)};
}

struct ReflectionRoot {
    double freq_ratio;
    double beta_after;
};

/// Solves the moving-mirror reflection system for (nu_r, v') with the
/// reflected energy ratio as the bisection unknown: momentum conservation
/// fixes the mirror's final momentum for a trial nu_r, the energy residual
/// selects the root. Requires eps_i > 0.
inline ReflectionRoot solve_reflection(double eps_i, double beta) {
    const double gamma0 = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
    const double p0 = eps_i + beta * gamma0;
    const auto energy_residual = [&](double er) {
        const double p1 = p0 + er;  // reflected photon leaves along -y
        return (eps_i + gamma0) - (std::sqrt(1.0 + p1 * p1) + er);
    };
    const double er_max = eps_i + gamma0 - 1.0;
    const double er = bisect(energy_residual, 0.0, er_max);
    const double p1 = p0 + er;
    return ReflectionRoot{er / eps_i, p1 / std::sqrt(1.0 + p1 * p1)};
}

struct TripleLD {
    long double dx;
    long double dy;
    long double dt;
};

/// Direct 3x3 boost-matrix evaluation at extended precision.
inline TripleLD boost_matrix(const TripleLD& v, long double beta, bool along_x) {
    const long double gamma =
        1.0L / std::sqrt((1.0L - beta) * (1.0L + beta));
    if (along_x) {
        return TripleLD{gamma * (v.dx - beta * v.dt), v.dy,
                        gamma * (v.dt - beta * v.dx)};
    }
    return TripleLD{v.dx, gamma * (v.dy - beta * v.dt),
                    gamma * (v.dt - beta * v.dy)};
}

inline long double lorentz_factor_ld(long double beta) {
    return 1.0L / std::sqrt((1.0L - beta) * (1.0L + beta));
}

/// Relative error against a nonzero reference.
inline double rel_err(double actual, double expected) {
    if (expected == 0.0) return std::abs(actual);
    return std::abs((actual - expected) / expected);
}

}  // namespace oracle
