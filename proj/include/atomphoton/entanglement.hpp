#ifndef ATOMPHOTON_ENTANGLEMENT_HPP
#define ATOMPHOTON_ENTANGLEMENT_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "atomphoton/grid.hpp"
#include "atomphoton/params.hpp"

// Schmidt number via grid SVD, the R-parameter, and the Heisenberg /
// conditional uncertainty products with their time-dependent bounds.

namespace atomphoton {

// R(t) = sqrt(eta + beta^2/eta) * sqrt(eta + 1/eta), eta = eta(t).
// Ratio of single-particle to coincidence widths, identical for photon
// and atom in the closed forms.  Minimum value 1 + beta at eta = sqrt(beta);
// under spreading eta only grows, so R is eventually increasing without bound.
inline double r_parameter(const Params& p, TimePoint t) {
    const double eta = eta_at(p, t);
    return std::sqrt(eta + p.beta * p.beta / eta) * std::sqrt(eta + 1.0 / eta);
}

struct SchmidtResult {
    double K = 1.0;
    std::vector<double> spectrum;  // p_n, non-increasing, sum 1
    bool tail_coverage_warning = false;
};

// Schmidt number of a sampled two-particle amplitude.  The grid kernel
// M_ij = psi(x_i, y_j) sqrt(dx dy) is decomposed by SVD; p_n = s_n^2 / sum s^2
// and K = 1 / sum p_n^2.  Throws on a numerically empty amplitude; a grid
// whose boundary still carries amplitude raises the tail-coverage flag.
inline SchmidtResult schmidt_number_svd(const AmplitudeGrid& a) {
    const int nx = a.grid.nx, ny = a.grid.ny;

    bool complex_valued = false;
    double peak = 0.0;
    for (const auto& v : a.values) {
        if (v.imag() != 0.0) complex_valued = true;
        peak = std::max(peak, std::abs(v));
    }

    double edge = 0.0;
    for (int i = 0; i < nx; ++i) {
        edge = std::max(edge, std::abs(a.at(i, 0)));
        edge = std::max(edge, std::abs(a.at(i, ny - 1)));
    }
    for (int j = 0; j < ny; ++j) {
        edge = std::max(edge, std::abs(a.at(0, j)));
        edge = std::max(edge, std::abs(a.at(nx - 1, j)));
    }

    const double scale = std::sqrt(a.grid.dx() * a.grid.dy());
    Eigen::VectorXd sv;
    if (complex_valued) {
        Eigen::MatrixXcd M(nx, ny);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j) M(i, j) = a.at(i, j) * scale;
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
        sv = svd.singularValues();
    } else {
        Eigen::MatrixXd M(nx, ny);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j) M(i, j) = a.at(i, j).real() * scale;
        Eigen::BDCSVD<Eigen::MatrixXd> svd(M);
        sv = svd.singularValues();
    }

    double s2 = 0.0;
    for (int i = 0; i < sv.size(); ++i) s2 += sv[i] * sv[i];
    if (s2 < 1e-12)
        throw std::runtime_error("schmidt_number_svd: degenerate grid, squared norm < 1e-12");

    SchmidtResult out;
    out.spectrum.resize(sv.size());
    double purity = 0.0;
    for (int i = 0; i < sv.size(); ++i) {
        const double pn = sv[i] * sv[i] / s2;
        out.spectrum[i] = pn;
        purity += pn * pn;
    }
    out.K = 1.0 / purity;
    out.tail_coverage_warning = (edge > 1e-6 * peak);
    return out;
}

struct UncertaintyProducts {
    double heis_ph = 0, heis_at = 0;  // single-particle products, = K
    double cond_ph = 0, cond_at = 0;  // coincidence products, in (0, 1]
};

struct UncertaintyBounds {
    double lower = 0;  // max(1/K, 1/R_t), binds cond_ph from below (t > 0)
    double upper = 1;
};

struct EntanglementReport {
    double K = 1;            // r_parameter at t = 0 (analytic) or SVD value
    std::vector<double> singular_spectrum;
    double R0 = 1;
    double R_t = 1;
    UncertaintyProducts products;
    UncertaintyBounds bounds;
    double t = 0;
    bool validity_warning = false;
    bool tail_coverage_warning = false;
    double grid_shift = 0;  // relative K change under grid halving, when measured
};

// Coordinate-momentum uncertainty products at time t.
//   heis_ph = dr_ph^(s)(0) dk^(s)   heis_at = dr_at^(s)(0) dq^(s)   (both = K)
//   cond_ph = [eta/sqrt(eta^2+beta^2)] [1/sqrt(eta0^2+1)]
//           = (1/R_t) sqrt((eta^2+1)/(eta0^2+1)), grows toward 1
//   cond_at = [1/sqrt(1+eta^2)] [eta0/sqrt(eta0^2+beta^2)], falls toward 0
// with max(1/K, 1/R_t) <= cond_ph < 1 and cond_at <= 1/K <= 1 (equalities at t=0).
inline EntanglementReport uncertainty_products(const Params& p, TimePoint t) {
    const double e0 = p.eta0, b = p.beta;
    const double eta = eta_at(p, t);
    EntanglementReport rep;
    rep.K = r_parameter(p, TimePoint(0.0));
    rep.R0 = rep.K;
    rep.R_t = r_parameter(p, t);
    rep.products.heis_ph = std::sqrt(1.0 + e0 * e0) * std::sqrt(e0 * e0 + b * b) / e0;
    rep.products.heis_at = (std::sqrt(e0 * e0 + b * b) / e0) * std::sqrt(1.0 + e0 * e0);
    rep.products.cond_ph =
        (eta / std::sqrt(eta * eta + b * b)) / std::sqrt(e0 * e0 + 1.0);
    rep.products.cond_at =
        (1.0 / std::sqrt(1.0 + eta * eta)) * (e0 / std::sqrt(e0 * e0 + b * b));
    rep.bounds.lower = std::max(1.0 / rep.K, 1.0 / rep.R_t);
    rep.bounds.upper = 1.0;
    rep.t = t.value;
    rep.validity_warning = outside_long_time_validity(t);
    return rep;
}

// Time window for hidden-entanglement scans.
struct TimeRange {
    double t_min = 0, t_max = 0;
    int points = 0;
};

struct HiddenInterval {
    double t_start = 0, t_end = 0;
    double eta_start = 0, eta_end = 0;
};

// t-intervals where |R(t) - 1| < r_window while the (constant) degree of
// entanglement R0 stays above k_min: the region where strong entanglement
// is invisible to width-ratio measurements.  Thresholds are tool
// conventions.  Throws when R0 <= k_min (nothing to hide).
inline std::vector<HiddenInterval> hidden_entanglement_scan(const Params& p,
                                                            const TimeRange& range,
                                                            double r_window = 0.1,
                                                            double k_min = 1.1) {
    if (range.points < 2 || !(range.t_max > range.t_min) || range.t_min < 0.0)
        throw std::domain_error("hidden_entanglement_scan: bad time range");
    const double R0 = r_parameter(p, TimePoint(0.0));
    if (!(R0 > k_min))
        throw std::domain_error(
            "hidden_entanglement_scan: R0 = " + std::to_string(R0) +
            " does not exceed the entanglement threshold " + std::to_string(k_min));

    auto inside = [&](double t) {
        return std::fabs(r_parameter(p, TimePoint(t)) - 1.0) < r_window;
    };
    auto refine = [&](double lo, double hi) {
        // bisect the inside/outside boundary between lo and hi
        const bool lo_in = inside(lo);
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (inside(mid) == lo_in)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };

    const double dt = (range.t_max - range.t_min) / (range.points - 1);
    std::vector<HiddenInterval> out;
    bool open = false;
    double start = 0.0;
    for (int i = 0; i < range.points; ++i) {
        const double t = range.t_min + i * dt;
        const bool in = inside(t);
        if (in && !open) {
            start = (i == 0) ? t : refine(t - dt, t);
            open = true;
        } else if (!in && open) {
            const double end = refine(t - dt, t);
            out.push_back({start, end, eta_at(p, TimePoint(start)), eta_at(p, TimePoint(end))});
            open = false;
        }
    }
    if (open)
        out.push_back({start, range.t_max, eta_at(p, TimePoint(start)),
                       eta_at(p, TimePoint(range.t_max))});
    return out;
}

}  // namespace atomphoton

#endif
