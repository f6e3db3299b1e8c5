#ifndef ATOMPHOTON_MOMENTUM_HPP
#define ATOMPHOTON_MOMENTUM_HPP

#include <cmath>
#include <complex>
#include <string>

#include "atomphoton/grid.hpp"
#include "atomphoton/params.hpp"

// Two-particle momentum amplitude in the collinear geometry: atom momentum
// and photon wave vector parallel to the observation direction.  The slow
// prefactors (sin theta_k, 1/sqrt(omega_k)) are constants over the narrow
// linewidth and live inside the normalization; the constant recoil shift
// is absorbed into the origin of kappa.  Both forms depend on (eta0, beta)
// only -- momentum widths carry no time dependence.

namespace atomphoton {

// Recoil-shifted dimensionless momenta:
//   u     = a0 (q + k0)        atom momentum, units 1/a0
//   kappa = (k - k0) c/gamma   photon detuning, units gamma/c
struct MomentumPoint {
    double u = 0;
    double kappa = 0;
};

namespace detail {

// (s, w) = (kappa - beta u / eta0, u + eta0 kappa); the linear map
// (u, kappa) -> (s, w) has Jacobian 1 + beta.
inline double lorentz_shift(const MomentumPoint& pt, const Params& p) {
    return pt.kappa - p.beta * pt.u / p.eta0;
}

inline double gauss_shift(const MomentumPoint& pt, const Params& p) {
    return pt.u + p.eta0 * pt.kappa;
}

}  // namespace detail

// N [kappa - beta u/eta0 + i/2]^{-1} exp(-(u + eta0 kappa)^2 / 2) with N
// fixed so the squared magnitude integrates to 1 over (u, kappa):
//   int |.|^2 = N^2 (2 pi^{3/2}) / (1 + beta).
// The denominator magnitude never drops below 1/2.
inline std::complex<double> momentum_amplitude_lorentz(const MomentumPoint& pt,
                                                       const Params& p) {
    const double N = std::sqrt((1.0 + p.beta) / (2.0 * std::pow(M_PI, 1.5)));
    const std::complex<double> den(detail::lorentz_shift(pt, p), 0.5);
    const double w = detail::gauss_shift(pt, p);
    return N * std::exp(-0.5 * w * w) / den;
}

// Gaussian substitution of the Lorentzian factor:
//   N' exp(-(kappa - beta u/eta0)^2 / 2) exp(-(u + eta0 kappa)^2 / 2),
// real positive, unit squared norm: N'^2 = (1 + beta) / pi.
inline double momentum_amplitude_gauss(const MomentumPoint& pt, const Params& p) {
    const double N = std::sqrt((1.0 + p.beta) / M_PI);
    const double s = detail::lorentz_shift(pt, p);
    const double w = detail::gauss_shift(pt, p);
    return N * std::exp(-0.5 * (s * s + w * w));
}

enum class MomentumForm { lorentz, gauss };

inline std::string to_string(MomentumForm f) {
    return f == MomentumForm::lorentz ? "momentum_lorentz" : "momentum_gauss";
}

// Default (u, kappa) grid sized from the gauss-form marginal widths.
inline Grid2D default_grid_momentum(const Params& p, int n, double extent_sigmas = 8.0) {
    const double e = p.eta0, b = p.beta;
    const double w_u = std::sqrt(1.0 + e * e) / (1.0 + b);
    const double w_k = std::sqrt(e * e + b * b) / (e * (1.0 + b));
    return Grid2D::make(n, n, -extent_sigmas * w_u, extent_sigmas * w_u,
                        -extent_sigmas * w_k, extent_sigmas * w_k);
}

// |amplitude|^2 of the chosen form on a grid; axes (u, kappa).
inline DensityGrid sample_momentum_density(const Grid2D& grid, const Params& p,
                                           MomentumForm form) {
    DensityGrid d;
    d.grid = grid;
    d.meta = GridMeta{to_string(form), p.eta0, p.beta, p.tau_spr, 0.0, 1.0, false, "u", "kappa"};
    d.values.resize(grid.size());
    for (int i = 0; i < grid.nx; ++i) {
        for (int j = 0; j < grid.ny; ++j) {
            const MomentumPoint pt{grid.x(i), grid.y(j)};
            if (form == MomentumForm::lorentz) {
                d.at(i, j) = std::norm(momentum_amplitude_lorentz(pt, p));
            } else {
                const double a = momentum_amplitude_gauss(pt, p);
                d.at(i, j) = a * a;
            }
        }
    }
    return d;
}

}  // namespace atomphoton

#endif
