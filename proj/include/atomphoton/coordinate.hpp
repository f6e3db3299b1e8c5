#ifndef ATOMPHOTON_COORDINATE_HPP
#define ATOMPHOTON_COORDINATE_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "atomphoton/grid.hpp"
#include "atomphoton/params.hpp"

// Closed-form coordinate-space proto-packets of the decayed atom-photon
// state, their entangled combination, the exactly solvable 1D Gaussian
// model, and grid sampling.

namespace atomphoton {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }

// Raised when a coordinate falls inside the excluded origin of the
// photon packet (the 1/rho^2 point is integrable but not evaluable).
struct singularity_error : std::domain_error {
    using std::domain_error::domain_error;
};

inline constexpr double kSingularityFloor = 1e-12;

// |Psi_rel(rho,t)|^2: outgoing photon packet around the emitter, dipole
// axis along z.  3 sin^2(theta) / (8 pi rho^2) * Theta(t - rho) * exp(rho - t),
// in units (gamma/c)^3.  Zero outside the light cone rho > t.
inline double photon_proto_density_3d(Vec3 rho, TimePoint t, const Params&,
                                      double floor = kSingularityFloor) {
    const double r2 = rho.norm2();
    const double r = std::sqrt(r2);
    if (r < floor)
        throw singularity_error("photon_proto_density_3d: |rho| below singularity floor");
    if (r > t.value) return 0.0;
    const double sin2 = (rho.x * rho.x + rho.y * rho.y) / r2;
    return 3.0 * sin2 / (8.0 * M_PI * r2) * std::exp(r - t.value);
}

// |Psi_cm(R,t)|^2: spreading isotropic Gaussian of width a(t), unit norm.
inline double atom_proto_density_3d(Vec3 R, TimePoint t, const Params& p) {
    const double a = packet_width_a(p, t);
    const double pref = 1.0 / (std::sqrt(M_PI) * a);
    return pref * pref * pref * std::exp(-R.norm2() / (a * a));
}

// Entangled argument of the atomic packet:
//   R = r_at (1 - beta) + beta r_ph  ==  r_at + beta (r_ph - r_at).
inline Vec3 entangled_argument(Vec3 r_at, Vec3 r_ph, const Params& p) {
    return (1.0 - p.beta) * r_at + p.beta * r_ph;
}

// Joint density |Psi(r_at, r_ph, t)|^2, units (gamma/c)^6.  Product of the
// two proto-packets with entangled arguments; the map (r_at, r_ph) ->
// (R, rho) has unit Jacobian, so the double integral equals 1 - exp(-t).
inline double joint_density_3d(Vec3 r_at, Vec3 r_ph, TimePoint t, const Params& p,
                               double floor = kSingularityFloor) {
    const Vec3 rho = r_ph - r_at;
    return photon_proto_density_3d(rho, t, p, floor) *
           atom_proto_density_3d(entangled_argument(r_at, r_ph, p), t, p);
}

namespace detail {

// Truncated exponential photon factor of the 1D analog, normalized to
// unit mass on its support.  One-sided: u in [0,t] (emission toward +x);
// two-sided variant symmetrizes for studies that need it.
inline double photon_factor_1d(double u, double t, bool two_sided) {
    if (t <= 0.0) return 0.0;
    const double norm = -std::expm1(-t);  // 1 - e^{-t}
    if (two_sided) {
        const double au = std::fabs(u);
        if (au > t) return 0.0;
        return 0.5 * std::exp(au - t) / norm;
    }
    if (u < 0.0 || u > t) return 0.0;
    return std::exp(u - t) / norm;
}

inline double gaussian_factor_1d(double X, double a) {
    return std::exp(-X * X / (a * a)) / (std::sqrt(M_PI) * a);
}

}  // namespace detail

// 1D analog of the joint density, units (gamma/c)^2:
//   f(u) g(X),  u = x_ph - x_at,  X = (1-beta) x_at + beta x_ph,
// f the unit-mass truncated exponential, g the unit-mass Gaussian of
// width a(t).  Exactly normalized to 1 (unit Jacobian).
inline double joint_density_1d(double x_at, double x_ph, TimePoint t, const Params& p,
                               bool two_sided = false) {
    const double u = x_ph - x_at;
    const double X = (1.0 - p.beta) * x_at + p.beta * x_ph;
    return detail::photon_factor_1d(u, t.value, two_sided) *
           detail::gaussian_factor_1d(X, packet_width_a(p, t));
}

// Exactly solvable model: both factors Gaussian, photon factor width A
// (units c/gamma, A = 1 corresponds to the natural width c/gamma).
// Real positive amplitude with |psi|^2 = exp(-u^2/A^2 - X^2/a^2) / (pi A a).
inline double gaussian_model_amplitude_1d(double x_at, double x_ph, TimePoint t,
                                          const Params& p, double rel_width = 1.0) {
    if (!(rel_width > 0.0))
        throw std::domain_error("gaussian_model_amplitude_1d: width A must be > 0");
    const double a = packet_width_a(p, t);
    const double u = x_ph - x_at;
    const double X = (1.0 - p.beta) * x_at + p.beta * x_ph;
    return std::exp(-u * u / (2.0 * rel_width * rel_width) - X * X / (2.0 * a * a)) /
           std::sqrt(M_PI * rel_width * a);
}

enum class CoordModel { full_1d, gaussian_1d };

inline std::string to_string(CoordModel m) {
    return m == CoordModel::full_1d ? "full_1d" : "gaussian_1d";
}

// Default grid for the Gaussian model: extent_sigmas marginal widths on
// each side of center, independently per axis.
inline Grid2D default_grid_gaussian_1d(const Params& p, TimePoint t, int n,
                                       double extent_sigmas = 8.0, double rel_width = 1.0) {
    const double a = packet_width_a(p, t);
    const double w_at = std::sqrt(a * a + p.beta * p.beta * rel_width * rel_width);
    const double w_ph =
        std::sqrt(a * a + (1.0 - p.beta) * (1.0 - p.beta) * rel_width * rel_width);
    return Grid2D::make(n, n, -extent_sigmas * w_at, extent_sigmas * w_at,
                        -extent_sigmas * w_ph, extent_sigmas * w_ph);
}

// Default grid for the full 1D model.  Covers the causal band
// 0 <= x_ph - x_at <= t plus extent_sigmas Gaussian widths of margin.
// Both axes share one spacing and the grid is offset so the sharp edge
// u = t falls midway between node diagonals; midpoint sums then stay
// second order across the cutoff.
inline Grid2D default_grid_full_1d(const Params& p, TimePoint t, int n,
                                   double extent_sigmas = 8.0, bool two_sided = false) {
    const double a = packet_width_a(p, t);
    const double W = extent_sigmas * a;
    const double tt = t.value;
    double x_lo = -W - p.beta * tt, x_hi = W;
    double y_lo = -W, y_hi = W + (1.0 - p.beta) * tt;
    if (two_sided) {
        x_lo = -W - p.beta * tt;
        x_hi = W + p.beta * tt;
        y_lo = -W - (1.0 - p.beta) * tt;
        y_hi = W + (1.0 - p.beta) * tt;
    }
    // equalize spans so dx == dy
    const double span = std::max(x_hi - x_lo, y_hi - y_lo);
    double cx = 0.5 * (x_lo + x_hi), cy = 0.5 * (y_lo + y_hi);
    x_lo = cx - 0.5 * span;
    x_hi = cx + 0.5 * span;
    y_lo = cy - 0.5 * span;
    y_hi = cy + 0.5 * span;
    const double h = span / n;
    // node diagonals carry u = (y_lo - x_lo) + (j - i) h; shift y so the
    // cutoff u = t sits half a cell off that lattice
    const double frac = (y_lo - x_lo - tt) / h;
    const double shift = (frac - std::floor(frac) - 0.5) * h;
    y_lo -= shift;
    y_hi -= shift;
    return Grid2D::make(n, n, x_lo, x_hi, y_lo, y_hi);
}

// Pointwise evaluation of the chosen 1D model on a grid.  Deterministic
// row-major order; model and parameters recorded in the metadata.
inline DensityGrid sample_density(const Grid2D& grid, TimePoint t, const Params& p,
                                  CoordModel model, bool two_sided = false,
                                  double rel_width = 1.0) {
    DensityGrid d;
    d.grid = grid;
    d.meta = GridMeta{to_string(model), p.eta0,     p.beta, p.tau_spr,
                      t.value,          rel_width, two_sided};
    d.values.resize(grid.size());
    for (int i = 0; i < grid.nx; ++i) {
        const double xa = grid.x(i);
        for (int j = 0; j < grid.ny; ++j) {
            const double xp = grid.y(j);
            double v;
            if (model == CoordModel::full_1d) {
                v = joint_density_1d(xa, xp, t, p, two_sided);
            } else {
                const double amp = gaussian_model_amplitude_1d(xa, xp, t, p, rel_width);
                v = amp * amp;
            }
            d.at(i, j) = v;
        }
    }
    return d;
}

// Amplitude of the Gaussian model on a grid (real positive, stored complex).
inline AmplitudeGrid sample_gaussian_amplitude(const Grid2D& grid, TimePoint t,
                                               const Params& p, double rel_width = 1.0) {
    AmplitudeGrid a;
    a.grid = grid;
    a.meta = GridMeta{"gaussian_1d", p.eta0, p.beta, p.tau_spr, t.value, rel_width, false};
    a.values.resize(grid.size());
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.ny; ++j)
            a.at(i, j) = gaussian_model_amplitude_1d(grid.x(i), grid.y(j), t, p, rel_width);
    return a;
}

// Amplitude of the full 1D model, sqrt of the joint density.
inline AmplitudeGrid sample_full_amplitude(const Grid2D& grid, TimePoint t, const Params& p,
                                           bool two_sided = false) {
    AmplitudeGrid a;
    a.grid = grid;
    a.meta = GridMeta{"full_1d", p.eta0, p.beta, p.tau_spr, t.value, 1.0, two_sided};
    a.values.resize(grid.size());
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.ny; ++j)
            a.at(i, j) = std::sqrt(joint_density_1d(grid.x(i), grid.y(j), t, p, two_sided));
    return a;
}

}  // namespace atomphoton

#endif
