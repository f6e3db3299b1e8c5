#ifndef ATOMPHOTON_WIDTHS_HPP
#define ATOMPHOTON_WIDTHS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "atomphoton/grid.hpp"
#include "atomphoton/params.hpp"

// Width estimators for sampled densities plus the closed-form width set.
//
// Width convention: standardized width w = sqrt(2) * sigma of the
// normalized density, calibrated so exp(-x^2/a^2) measures exactly a.
// The closed forms are stated only up to order-one shape factors; this
// convention makes every Gaussian-model claim exact.  Note the one-sided
// exponential proto-packet measures sqrt(2), not 1.

namespace atomphoton {

struct nonconvergent_width_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_slice_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Estimated mass beyond one grid edge, from a geometric continuation of
// the outermost samples.  A profile that rises toward (or is flat at)
// the edge is taken to end there -- that is the causality-cut shape --
// while a decaying edge is extrapolated.
inline double edge_tail_mass(const Profile1D& prof, bool right, double v_max) {
    const int n = static_cast<int>(prof.v.size());
    const int k = std::max(3, n / 32);
    if (n < k + 1) return 0.0;
    const double v_edge = right ? prof.v[n - 1] : prof.v[0];
    if (v_edge <= 1e-14 * v_max) return 0.0;
    const double v_in = right ? prof.v[n - 1 - k] : prof.v[k];
    if (v_in <= 0.0 || v_edge >= v_in) return 0.0;  // truncated support
    const double r = std::pow(v_edge / v_in, 1.0 / k);
    return v_edge * prof.dx * r / (1.0 - r);
}

}  // namespace detail

// sqrt(2) * standard deviation of the normalized samples.  Throws
// empty_slice_error on non-positive mass and nonconvergent_width_error
// when the extrapolated off-grid tail mass exceeds 1e-3 of the total
// (heavy-tailed profiles, e.g. Lorentzian marginals).
inline double standardized_width(const Profile1D& prof, double tail_tol = 1e-3) {
    if (prof.v.size() < 2 || !(prof.dx > 0.0))
        throw std::domain_error("standardized_width: need >= 2 samples on a positive spacing");
    double mass = 0.0, v_max = 0.0;
    for (double v : prof.v) {
        if (!std::isfinite(v) || v < 0.0)
            throw std::domain_error("standardized_width: samples must be finite and >= 0");
        mass += v;
        v_max = std::max(v_max, v);
    }
    mass *= prof.dx;
    if (!(mass > 0.0)) throw empty_slice_error("standardized_width: zero total mass");

    const double tail = detail::edge_tail_mass(prof, false, v_max) +
                        detail::edge_tail_mass(prof, true, v_max);
    if (tail > tail_tol * mass)
        throw nonconvergent_width_error(
            "standardized_width: estimated off-grid tail mass " + std::to_string(tail / mass) +
            " of total exceeds threshold; second moment not trustworthy");

    double m1 = 0.0;
    for (std::size_t i = 0; i < prof.v.size(); ++i) m1 += prof.v[i] * prof.x(static_cast<int>(i));
    m1 *= prof.dx / mass;
    double m2 = 0.0;
    for (std::size_t i = 0; i < prof.v.size(); ++i) {
        const double d = prof.x(static_cast<int>(i)) - m1;
        m2 += prof.v[i] * d * d;
    }
    m2 *= prof.dx / mass;
    return std::sqrt(2.0 * m2);
}

// Full width at half maximum by linear interpolation, for line-shape
// comparisons where second moments diverge (Lorentzian forms).
inline double fwhm(const Profile1D& prof) {
    const int n = static_cast<int>(prof.v.size());
    int ipk = 0;
    for (int i = 1; i < n; ++i)
        if (prof.v[i] > prof.v[ipk]) ipk = i;
    const double half = 0.5 * prof.v[ipk];
    if (!(half > 0.0)) throw empty_slice_error("fwhm: empty profile");
    double left = prof.x(0), right = prof.x(n - 1);
    for (int i = ipk; i > 0; --i) {
        if (prof.v[i - 1] <= half) {
            const double f = (prof.v[i] - half) / (prof.v[i] - prof.v[i - 1]);
            left = prof.x(i) - f * prof.dx;
            break;
        }
    }
    for (int i = ipk; i < n - 1; ++i) {
        if (prof.v[i + 1] <= half) {
            const double f = (prof.v[i] - half) / (prof.v[i] - prof.v[i + 1]);
            right = prof.x(i) + f * prof.dx;
            break;
        }
    }
    return right - left;
}

// Grid slices and marginals -------------------------------------------------

inline Profile1D grid_slice(const DensityGrid& d, Axis vary, int fixed_index) {
    Profile1D prof;
    if (vary == Axis::y) {
        prof.x0 = d.grid.y(0);
        prof.dx = d.grid.dy();
        prof.v.resize(d.grid.ny);
        for (int j = 0; j < d.grid.ny; ++j) prof.v[j] = d.at(fixed_index, j);
    } else {
        prof.x0 = d.grid.x(0);
        prof.dx = d.grid.dx();
        prof.v.resize(d.grid.nx);
        for (int i = 0; i < d.grid.nx; ++i) prof.v[i] = d.at(i, fixed_index);
    }
    return prof;
}

inline Profile1D grid_marginal(const DensityGrid& d, Axis keep) {
    Profile1D prof;
    if (keep == Axis::x) {
        prof.x0 = d.grid.x(0);
        prof.dx = d.grid.dx();
        prof.v.assign(d.grid.nx, 0.0);
        for (int i = 0; i < d.grid.nx; ++i) {
            double s = 0.0;
            for (int j = 0; j < d.grid.ny; ++j) s += d.at(i, j);
            prof.v[i] = s * d.grid.dy();
        }
    } else {
        prof.x0 = d.grid.y(0);
        prof.dx = d.grid.dy();
        prof.v.assign(d.grid.ny, 0.0);
        for (int j = 0; j < d.grid.ny; ++j) {
            double s = 0.0;
            for (int i = 0; i < d.grid.nx; ++i) s += d.at(i, j);
            prof.v[j] = s * d.grid.dx();
        }
    }
    return prof;
}

// Single-particle (marginal) width: integrate the other axis out with
// the grid quadrature weights, then standardized_width.
inline double marginal_width(const DensityGrid& d, Axis keep, double tail_tol = 1e-3) {
    return standardized_width(grid_marginal(d, keep), tail_tol);
}

namespace detail {

inline int nearest_index(double x, double x0, double dx, int n) {
    int i = static_cast<int>(std::lround((x - x0) / dx));
    return std::clamp(i, 0, n - 1);
}

}  // namespace detail

// Coincidence (conditional) width of the varying axis, maximized over a
// set of fixed positions.  When no positions are given, nine slices
// spanning +/- 2 marginal widths around the fixed axis's marginal peak
// are used (snapped to grid nodes).
inline double conditional_width(const DensityGrid& d, Axis vary,
                                std::vector<double> fixed_values = {},
                                double tail_tol = 1e-3) {
    const Axis fixed = (vary == Axis::y) ? Axis::x : Axis::y;
    const double f_x0 = (fixed == Axis::x) ? d.grid.x(0) : d.grid.y(0);
    const double f_dx = (fixed == Axis::x) ? d.grid.dx() : d.grid.dy();
    const int f_n = (fixed == Axis::x) ? d.grid.nx : d.grid.ny;

    if (fixed_values.empty()) {
        const Profile1D marg = grid_marginal(d, fixed);
        int ipk = 0;
        for (std::size_t i = 1; i < marg.v.size(); ++i)
            if (marg.v[i] > marg.v[ipk]) ipk = static_cast<int>(i);
        const double peak = marg.x(ipk);
        const double w = standardized_width(marg, tail_tol);
        for (int k = -4; k <= 4; ++k) fixed_values.push_back(peak + 0.5 * k * w);
    }

    double best = 0.0;
    bool any = false;
    for (double fv : fixed_values) {
        const int idx = detail::nearest_index(fv, f_x0, f_dx, f_n);
        const Profile1D slice = grid_slice(d, vary, idx);
        best = std::max(best, standardized_width(slice, tail_tol));
        any = true;
    }
    if (!any) throw std::domain_error("conditional_width: no fixed values");
    return best;
}

// Closed-form width set -----------------------------------------------------

enum class WidthSource { analytic, numeric };
enum class WidthSpace { coordinate, momentum };

struct WidthReport {
    double coinc_ph = 0, single_ph = 0, coinc_at = 0, single_at = 0;
    double rel_coinc_ph = 0, rel_single_ph = 0, rel_coinc_at = 0, rel_single_at = 0;
    WidthSource source = WidthSource::analytic;
    WidthSpace space = WidthSpace::coordinate;
    Params params{};
    double t = 0;
    bool validity_warning = false;  // coordinate reports with t < long-time threshold
};

// Coordinate-space widths at time t, photon widths in units c/gamma and
// atom widths sharing them:
//   coinc_ph  = eta / sqrt(eta^2 + beta^2)     single_ph = sqrt(1 + eta^2)
//   coinc_at  = a / sqrt(1 + eta^2)            single_at = a sqrt(eta^2 + beta^2) / eta
// with relative forms dividing photon widths by c/gamma and atom widths by a(t).
inline WidthReport analytic_coord_widths(const Params& p, TimePoint t) {
    const double eta = eta_at(p, t);
    const double a = packet_width_a(p, t);
    const double b = p.beta;
    WidthReport r;
    r.rel_coinc_ph = eta / std::sqrt(eta * eta + b * b);
    r.rel_single_ph = std::sqrt(1.0 + eta * eta);
    r.rel_coinc_at = 1.0 / std::sqrt(1.0 + eta * eta);
    r.rel_single_at = std::sqrt(eta * eta + b * b) / eta;
    r.coinc_ph = r.rel_coinc_ph;
    r.single_ph = r.rel_single_ph;
    r.coinc_at = a * r.rel_coinc_at;
    r.single_at = a * r.rel_single_at;
    r.source = WidthSource::analytic;
    r.space = WidthSpace::coordinate;
    r.params = p;
    r.t = t.value;
    r.validity_warning = outside_long_time_validity(t);
    return r;
}

// Momentum-space widths; time independent.  Atom (q) widths in 1/a0,
// photon (k) widths in gamma/c, so relative and absolute forms coincide
// numerically in these units:
//   dq_c = eta0 / sqrt(eta0^2 + beta^2)   dq_s = sqrt(1 + eta0^2)
//   dk_c = 1 / sqrt(1 + eta0^2)           dk_s = sqrt(eta0^2 + beta^2) / eta0
inline WidthReport analytic_momentum_widths(const Params& p) {
    const double e = p.eta0, b = p.beta;
    WidthReport r;
    r.rel_coinc_at = e / std::sqrt(e * e + b * b);          // dq^(c)
    r.rel_single_at = std::sqrt(1.0 + e * e);               // dq^(s)
    r.rel_coinc_ph = 1.0 / std::sqrt(1.0 + e * e);          // dk^(c)
    r.rel_single_ph = std::sqrt(e * e + b * b) / e;         // dk^(s)
    r.coinc_at = r.rel_coinc_at;
    r.single_at = r.rel_single_at;
    r.coinc_ph = r.rel_coinc_ph;
    r.single_ph = r.rel_single_ph;
    r.source = WidthSource::analytic;
    r.space = WidthSpace::momentum;
    r.params = p;
    r.t = 0.0;
    return r;
}

// Numeric width set of a sampled density; space inferred from the axis
// labels.  Coordinate photon widths are relative to c/gamma = 1, atom
// widths to a(t); momentum widths are already in natural units.
inline WidthReport numeric_width_report(const DensityGrid& d, double tail_tol = 1e-3) {
    WidthReport r;
    const bool momentum = (d.meta.axis_x == "u");
    const Params p{d.meta.eta0, d.meta.beta, d.meta.tau_spr};
    const TimePoint t(d.meta.t);
    r.coinc_at = conditional_width(d, Axis::x, {}, tail_tol);
    r.coinc_ph = conditional_width(d, Axis::y, {}, tail_tol);
    r.single_at = marginal_width(d, Axis::x, tail_tol);
    r.single_ph = marginal_width(d, Axis::y, tail_tol);
    const double at_unit = momentum ? 1.0 : packet_width_a(p, t);
    r.rel_coinc_ph = r.coinc_ph;
    r.rel_single_ph = r.single_ph;
    r.rel_coinc_at = r.coinc_at / at_unit;
    r.rel_single_at = r.single_at / at_unit;
    r.source = WidthSource::numeric;
    r.space = momentum ? WidthSpace::momentum : WidthSpace::coordinate;
    r.params = p;
    r.t = t.value;
    r.validity_warning = !momentum && outside_long_time_validity(t);
    return r;
}

// Reciprocity residuals:
//   |rel_coinc_at * rel_single_ph - 1| and |rel_coinc_ph * rel_single_at - 1|,
// identically zero for the analytic forms.  The aspect products report
// coinc_at * single_ph and coinc_ph * single_at against the expected
// a(t) * c/gamma (coordinate) or 1 (momentum).
struct ReciprocityReport {
    double resid_at_ph = 0;
    double resid_ph_at = 0;
    double aspect_at_ph = 0;
    double aspect_ph_at = 0;
    double aspect_expected = 0;
};

inline ReciprocityReport check_reciprocity(const WidthReport& r) {
    ReciprocityReport out;
    out.resid_at_ph = std::fabs(r.rel_coinc_at * r.rel_single_ph - 1.0);
    out.resid_ph_at = std::fabs(r.rel_coinc_ph * r.rel_single_at - 1.0);
    out.aspect_at_ph = r.coinc_at * r.single_ph;
    out.aspect_ph_at = r.coinc_ph * r.single_at;
    out.aspect_expected =
        (r.space == WidthSpace::coordinate) ? packet_width_a(r.params, TimePoint(r.t)) : 1.0;
    return out;
}

}  // namespace atomphoton

#endif
