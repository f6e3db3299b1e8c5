#ifndef ATOMPHOTON_PARAMS_HPP
#define ATOMPHOTON_PARAMS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

// Dimensionless unit system used throughout the library:
//   c = gamma = 1
// lengths in c/gamma, times in 1/gamma, photon momenta in gamma/c,
// atom momenta in 1/a0.  Every quantity of the model is then fixed by
// the three numbers in Params.

namespace atomphoton {

struct Params {
    double eta0;     // initial control parameter, gamma*a0/c
    double beta;     // recoil velocity ratio v_rec/c, in (0, 1]
    double tau_spr;  // packet spreading time, gamma*M*a0^2
};

// Validating factory.  Throws std::domain_error naming the offending field.
inline Params make_params(double eta0, double beta, double tau_spr) {
    if (!std::isfinite(eta0) || !std::isfinite(beta) || !std::isfinite(tau_spr))
        throw std::domain_error("make_params: parameters must be finite");
    if (eta0 <= 0.0)
        throw std::domain_error("make_params: eta0 must be > 0, got " + std::to_string(eta0));
    if (beta <= 0.0 || beta > 1.0)
        throw std::domain_error("make_params: beta must be in (0,1], got " + std::to_string(beta));
    if (tau_spr <= 0.0)
        throw std::domain_error("make_params: tau_spr must be > 0, got " + std::to_string(tau_spr));
    return Params{eta0, beta, tau_spr};
}

// Time in units 1/gamma, t >= 0.  The closed forms below are long-time
// results; callers may evaluate them at any t >= 0, but reports flag
// t < kLongTimeThreshold as outside the regime they were derived in.
struct TimePoint {
    double value = 0.0;

    TimePoint() = default;
    explicit TimePoint(double t) : value(t) {
        if (!(t >= 0.0) || !std::isfinite(t))
            throw std::domain_error("TimePoint: t must be finite and >= 0, got " +
                                    std::to_string(t));
    }
};

inline constexpr double kLongTimeThreshold = 3.0;

inline bool outside_long_time_validity(TimePoint t) {
    return t.value < kLongTimeThreshold;
}

// Width a(t) = eta0 * sqrt(1 + (t/tau_spr)^2) of the spreading atomic packet,
// in units c/gamma.  Strictly increasing and convex in t.
inline double packet_width_a(const Params& p, TimePoint t) {
    return p.eta0 * std::hypot(1.0, t.value / p.tau_spr);
}

// Control parameter eta(t) = gamma*a(t)/c.  Numerically identical to
// packet_width_a in these units; kept separate so call sites say what
// they mean.
inline double eta_at(const Params& p, TimePoint t) {
    return packet_width_a(p, t);
}

}  // namespace atomphoton

#endif
