#ifndef ATOMPHOTON_VERIFY_HPP
#define ATOMPHOTON_VERIFY_HPP

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "atomphoton/coordinate.hpp"
#include "atomphoton/entanglement.hpp"
#include "atomphoton/io.hpp"
#include "atomphoton/momentum.hpp"
#include "atomphoton/params.hpp"
#include "atomphoton/quadrature.hpp"
#include "atomphoton/widths.hpp"

// Acceptance suite: each criterion below runs with its tolerances pinned
// in code and reports one pass/fail line.  The same checks back the
// `verify` CLI subcommand.

namespace atomphoton::verify {

// ---------------------------------------------------------------------------
// Covariance oracle for the 1D Gaussian model.  Independent of the grid
// estimators: widths come from inverting the 2x2 precision matrix of
//   |psi|^2 = exp(-u^2/A^2 - X^2/a^2) / (pi A a),
//   u = x_ph - x_at,  X = (1-beta) x_at + beta x_ph.
struct GaussianOracle {
    double q_aa, q_pp, q_ap;  // density precision matrix entries
    double A, a;

    static GaussianOracle make(double a, double beta, double A = 1.0) {
        GaussianOracle o;
        o.A = A;
        o.a = a;
        o.q_aa = 1.0 / (A * A) + (1.0 - beta) * (1.0 - beta) / (a * a);
        o.q_pp = 1.0 / (A * A) + beta * beta / (a * a);
        o.q_ap = -1.0 / (A * A) + beta * (1.0 - beta) / (a * a);
        return o;
    }

    double det() const { return q_aa * q_pp - q_ap * q_ap; }
    // standardized widths: w = sqrt(2 Var), covariance = Q^{-1}/2
    double marginal_width_at() const { return std::sqrt(q_pp / det()); }
    double marginal_width_ph() const { return std::sqrt(q_aa / det()); }
    double conditional_width_at() const { return 1.0 / std::sqrt(q_aa); }
    double conditional_width_ph() const { return 1.0 / std::sqrt(q_pp); }
    // Schmidt number of the real Gaussian amplitude exp(-z^T Q z / 2)
    double schmidt_number() const { return std::sqrt(q_aa * q_pp / det()); }
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline double rel_err(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

struct Gate {
    bool ok = true;
    std::ostringstream msg;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (msg.tellp() > 0) msg << "; ";
            msg << what;
        }
    }
    void require_close(double got, double want, double tol, const std::string& what) {
        require(rel_err(got, want) <= tol, what + " got " + num(got) + " want " + num(want) +
                                               " (rel err " + num(rel_err(got, want)) + " > " +
                                               num(tol) + ")");
    }
};

}  // namespace detail

// --- criterion 1: normalization --------------------------------------------
// 3D joint density integrates to 1 - e^{-t} (t = 20, within 1e-3); the 1D
// analog integrates to exactly 1 (within 1e-6).
inline CheckResult criterion_normalization() {
    detail::Gate g;
    const Params p = make_params(0.05, 0.1, 100.0);

    {
        const TimePoint t(20.0);
        const double a = packet_width_a(p, t);
        const GaussLegendre gl_rho(48), gl_R(32), gl_th(16);
        const int n_phi = 4;
        // spherical tensor quadrature in the (R, rho) variables; the map
        // back to (r_at, r_ph) has unit Jacobian
        double total = 0.0;
        for (std::size_t ir = 0; ir < gl_rho.x.size(); ++ir) {
            const double rho_r = 0.5 * t.value * (1.0 + gl_rho.x[ir]);
            const double w_rho_r = 0.5 * t.value * gl_rho.w[ir] * rho_r * rho_r;
            for (std::size_t it = 0; it < gl_th.x.size(); ++it) {
                const double cth = gl_th.x[it];
                const double sth = std::sqrt(1.0 - cth * cth);
                const double w_rho = w_rho_r * gl_th.w[it];
                for (int ip = 0; ip < n_phi; ++ip) {
                    const double phi = 2.0 * M_PI * (ip + 0.5) / n_phi;
                    const Vec3 rho{rho_r * sth * std::cos(phi), rho_r * sth * std::sin(phi),
                                   rho_r * cth};
                    const double w1 = w_rho * (2.0 * M_PI / n_phi);
                    for (std::size_t jr = 0; jr < gl_R.x.size(); ++jr) {
                        const double R_r = 0.5 * 10.0 * a * (1.0 + gl_R.x[jr]);
                        const double w_R_r = 0.5 * 10.0 * a * gl_R.w[jr] * R_r * R_r;
                        for (std::size_t jt = 0; jt < gl_th.x.size(); ++jt) {
                            const double cth2 = gl_th.x[jt];
                            const double sth2 = std::sqrt(1.0 - cth2 * cth2);
                            // atom packet is isotropic; two azimuths exercise the vector path
                            for (int jp = 0; jp < 2; ++jp) {
                                const double phi2 = M_PI * (jp + 0.5);
                                const Vec3 R{R_r * sth2 * std::cos(phi2),
                                             R_r * sth2 * std::sin(phi2), R_r * cth2};
                                const Vec3 r_at = R - p.beta * rho;
                                const Vec3 r_ph = R + (1.0 - p.beta) * rho;
                                total += w1 * w_R_r * gl_th.w[jt] * M_PI *
                                         joint_density_3d(r_at, r_ph, t, p);
                            }
                        }
                    }
                }
            }
        }
        const double want = -std::expm1(-t.value);
        g.require(std::fabs(total - want) <= 1e-3,
                  "3d quadrature " + detail::num(total) + " vs " + detail::num(want));
    }

    {
        const TimePoint t(5.0);
        const double a = packet_width_a(p, t);
        const GaussLegendre gl(96);
        double total = 0.0;
        for (std::size_t iu = 0; iu < gl.x.size(); ++iu) {
            const double u = 0.5 * t.value * (1.0 + gl.x[iu]);
            const double wu = 0.5 * t.value * gl.w[iu];
            for (std::size_t ix = 0; ix < gl.x.size(); ++ix) {
                const double X = 10.0 * a * gl.x[ix];
                const double wX = 10.0 * a * gl.w[ix];
                total += wu * wX * joint_density_1d(X - p.beta * u, X + (1.0 - p.beta) * u, t, p);
            }
        }
        g.require(std::fabs(total - 1.0) <= 1e-6,
                  "1d quadrature " + detail::num(total) + " vs 1");
    }

    return {"normalization (3d -> 1-e^-t, 1d analog -> 1)", g.ok, g.msg.str()};
}

// --- criterion 2: Gaussian-model width exactness ----------------------------
// beta = 0.01, A = 1, eta in {0.05, 1, 20}: numeric conditional widths
// against eta/sqrt(eta^2+beta^2) and a/sqrt(1+eta^2) within 1e-3 relative;
// numeric marginal widths against the covariance oracle within 1e-3.
inline CheckResult criterion_gaussian_exactness() {
    detail::Gate g;
    const double beta = 0.01;
    for (double eta : {0.05, 1.0, 20.0}) {
        const Params p = make_params(eta, beta, 100.0);
        const TimePoint t0(0.0);
        const DensityGrid d = sample_density(default_grid_gaussian_1d(p, t0, 512), t0, p,
                                             CoordModel::gaussian_1d);
        const GaussianOracle oracle = GaussianOracle::make(eta, beta);
        const std::string tag = "eta=" + detail::num(eta) + " ";

        const double cond_ph = conditional_width(d, Axis::y);
        const double cond_at = conditional_width(d, Axis::x);
        g.require_close(cond_ph, eta / std::sqrt(eta * eta + beta * beta), 1e-3,
                        tag + "cond_ph vs eta/sqrt(eta^2+beta^2):");
        g.require_close(cond_at, eta / std::sqrt(1.0 + eta * eta), 1e-3,
                        tag + "cond_at vs a/sqrt(1+eta^2):");

        g.require_close(marginal_width(d, Axis::y), oracle.marginal_width_ph(), 1e-3,
                        tag + "marginal_ph vs oracle:");
        g.require_close(marginal_width(d, Axis::x), oracle.marginal_width_at(), 1e-3,
                        tag + "marginal_at vs oracle:");
    }
    {
        // pinned oracle example: beta = 0.1, eta = 0.05 -> photon marginal 0.9014
        const GaussianOracle oracle = GaussianOracle::make(0.05, 0.1);
        g.require(std::fabs(oracle.marginal_width_ph() - 0.9014) < 1e-4,
                  "oracle example 0.9014, got " + detail::num(oracle.marginal_width_ph()));
    }
    return {"gaussian-model width exactness (beta=0.01)", g.ok, g.msg.str()};
}

// --- criterion 3: Schmidt identity ------------------------------------------
// SVD K vs R0 of the closed form within 1%, on 1024^2 grids, for
// (eta0, beta) in {(0.05,0.01), (0.2,0.01), (1,1)}; K = 1 within 1e-6 for
// a factorized amplitude.
inline CheckResult criterion_schmidt_identity() {
    detail::Gate g;
    const struct {
        double eta0, beta;
    } cases[] = {{0.05, 0.01}, {0.2, 0.01}, {1.0, 1.0}};
    for (const auto& c : cases) {
        const Params p = make_params(c.eta0, c.beta, 100.0);
        const TimePoint t0(0.0);
        const AmplitudeGrid amp =
            sample_gaussian_amplitude(default_grid_gaussian_1d(p, t0, 1024), t0, p);
        const SchmidtResult sr = schmidt_number_svd(amp);
        const double R0 = r_parameter(p, t0);
        g.require_close(sr.K, R0, 0.01,
                        "K vs R0 at (eta0=" + detail::num(c.eta0) +
                            ", beta=" + detail::num(c.beta) + "):");
    }
    {
        AmplitudeGrid amp;
        amp.grid = Grid2D::make(256, 256, -6, 6, -8, 8);
        amp.values.resize(amp.grid.size());
        for (int i = 0; i < amp.grid.nx; ++i)
            for (int j = 0; j < amp.grid.ny; ++j)
                amp.at(i, j) = std::exp(-0.5 * amp.grid.x(i) * amp.grid.x(i)) *
                               std::exp(-0.25 * amp.grid.y(j) * amp.grid.y(j));
        const SchmidtResult sr = schmidt_number_svd(amp);
        g.require(std::fabs(sr.K - 1.0) <= 1e-6,
                  "factorized amplitude K " + detail::num(sr.K) + " vs 1");
    }
    return {"Schmidt identity (SVD K vs R0, 1024^2)", g.ok, g.msg.str()};
}

// --- criterion 4: width-curve regimes (beta = 1e-8) -------------------------
// rel_coinc_ph ~ eta/beta for eta <= 1e-10 (1%); plateau ~ 1 for
// beta << eta << 1 (5%); rel_single_ph ~ eta for eta >= 1e2 (1%); atom
// curves mirror-ordered.
inline CheckResult criterion_width_curves() {
    detail::Gate g;
    const double beta = 1e-8;
    auto widths_at = [&](double eta) {
        return analytic_coord_widths(make_params(eta, beta, 1.0), TimePoint(0.0));
    };

    for (double eta : {1e-12, 1e-10})
        g.require_close(widths_at(eta).rel_coinc_ph, eta / beta, 0.01,
                        "narrowing at eta=" + detail::num(eta) + ":");
    for (double eta : {1e-6, 1e-4, 1e-2})
        g.require(std::fabs(widths_at(eta).rel_coinc_ph - 1.0) <= 0.05,
                  "plateau at eta=" + detail::num(eta) + ": " +
                      detail::num(widths_at(eta).rel_coinc_ph));
    for (double eta : {1e2, 1e3})
        g.require_close(widths_at(eta).rel_single_ph, eta, 0.01,
                        "broadening at eta=" + detail::num(eta) + ":");

    {
        const WidthReport low = widths_at(1e-12), high = widths_at(1e2);
        g.require(low.rel_single_at > 100.0 && std::fabs(low.rel_coinc_at - 1.0) <= 0.05,
                  "atom mirror at small eta");
        g.require(high.rel_coinc_at < 0.011 && std::fabs(high.rel_single_at - 1.0) <= 0.01,
                  "atom mirror at large eta");
    }
    {
        WidthReport prev = widths_at(std::pow(10.0, -20.0));
        for (int i = 1; i <= 260; ++i) {
            const WidthReport cur = widths_at(std::pow(10.0, -20.0 + 26.0 * i / 260.0));
            g.require(cur.rel_coinc_ph >= prev.rel_coinc_ph &&
                          cur.rel_single_ph >= prev.rel_single_ph &&
                          cur.rel_coinc_at <= prev.rel_coinc_at &&
                          cur.rel_single_at <= prev.rel_single_at,
                      "curve monotonicity at sweep index " + std::to_string(i));
            g.require(cur.single_ph >= cur.coinc_ph && cur.single_at >= cur.coinc_at,
                      "single >= coinc at sweep index " + std::to_string(i));
            prev = cur;
        }
    }
    return {"width-curve regimes (beta=1e-8)", g.ok, g.msg.str()};
}

// --- criterion 5: R curve ----------------------------------------------------
// Single minimum 1 + beta at eta = sqrt(beta) (1e-6 for beta = 1e-4),
// R >= 1 everywhere, and the time parameterization moves right only.
inline CheckResult criterion_r_curve() {
    detail::Gate g;
    const double beta = 1e-4;
    auto R_of_eta = [&](double eta) {
        return r_parameter(make_params(eta, beta, 1.0), TimePoint(0.0));
    };
    g.require(std::fabs(R_of_eta(std::sqrt(beta)) - (1.0 + beta)) <= 1e-6,
              "R(sqrt(beta)) = " + detail::num(R_of_eta(std::sqrt(beta))) + " vs 1+beta");

    int sign_changes = 0;
    double prev_eta = std::pow(10.0, -8.0);
    double prev_R = R_of_eta(prev_eta);
    int prev_dir = 0;
    for (int i = 1; i <= 320; ++i) {
        const double eta = std::pow(10.0, -8.0 + 16.0 * i / 320.0);
        const double R = R_of_eta(eta);
        g.require(R >= 1.0 - 1e-12, "R >= 1 at eta=" + detail::num(eta));
        const int dir = (R > prev_R) ? 1 : -1;
        if (prev_dir != 0 && dir != prev_dir) ++sign_changes;
        prev_dir = dir;
        prev_R = R;
        prev_eta = eta;
    }
    g.require(sign_changes == 1,
              "expected a single interior minimum, saw " + std::to_string(sign_changes) +
                  " direction changes");

    const Params p = make_params(1e-3, beta, 50.0);
    double last = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double t = 10.0 * p.tau_spr * i / 200.0;
        const double eta = eta_at(p, TimePoint(t));
        g.require(eta >= last, "eta(t) non-decreasing");
        last = eta;
    }
    return {"R curve (minimum 1+beta at sqrt(beta), rightward flow)", g.ok, g.msg.str()};
}

// --- criterion 6: reciprocity ------------------------------------------------
// Analytic residuals identically zero; numeric Gaussian-model residuals
// < 1e-2 at beta = 0.01; momentum widths vs t=0 coordinate widths within 1e-3.
inline CheckResult criterion_reciprocity() {
    detail::Gate g;
    const double etas[] = {1e-8, 1e-3, 0.05, 0.7, 3.0, 40.0};
    const double betas[] = {1e-8, 1e-3, 0.2, 1.0};
    for (double eta0 : etas) {
        for (double beta : betas) {
            const Params p = make_params(eta0, beta, 25.0);
            for (double t : {0.0, 5.0, 250.0}) {
                const ReciprocityReport rr =
                    check_reciprocity(analytic_coord_widths(p, TimePoint(t)));
                g.require(rr.resid_at_ph <= 1e-12 && rr.resid_ph_at <= 1e-12,
                          "analytic residuals at eta0=" + detail::num(eta0) +
                              " beta=" + detail::num(beta));
            }
            const WidthReport mom = analytic_momentum_widths(p);
            const WidthReport c0 = analytic_coord_widths(p, TimePoint(0.0));
            g.require(detail::rel_err(mom.rel_coinc_at, c0.rel_coinc_ph) <= 1e-3 &&
                          detail::rel_err(mom.rel_single_at, c0.rel_single_ph) <= 1e-3 &&
                          detail::rel_err(mom.rel_coinc_ph, c0.rel_coinc_at) <= 1e-3 &&
                          detail::rel_err(mom.rel_single_ph, c0.rel_single_at) <= 1e-3,
                      "momentum/coordinate identities at eta0=" + detail::num(eta0) +
                          " beta=" + detail::num(beta));
            const ReciprocityReport mr = check_reciprocity(mom);
            g.require(mr.resid_at_ph <= 1e-12 && mr.resid_ph_at <= 1e-12,
                      "momentum reciprocity at eta0=" + detail::num(eta0));
        }
    }
    {
        const Params p = make_params(0.05, 0.01, 100.0);
        const TimePoint t0(0.0);
        const DensityGrid d = sample_density(default_grid_gaussian_1d(p, t0, 512), t0, p,
                                             CoordModel::gaussian_1d);
        const ReciprocityReport rr = check_reciprocity(numeric_width_report(d));
        g.require(rr.resid_at_ph < 1e-2 && rr.resid_ph_at < 1e-2,
                  "numeric gaussian residuals " + detail::num(rr.resid_at_ph) + ", " +
                      detail::num(rr.resid_ph_at));
    }
    return {"reciprocity and momentum/coordinate identities", g.ok, g.msg.str()};
}

// --- criterion 7: uncertainty bounds ----------------------------------------
// Sweep t in [0, 10 tau_spr]: no violations of
//   max(1/K, 1/R_t) <= cond_ph < 1  and  cond_at <= 1/K <= 1
// (lower bound saturates at t = 0); at t = 0 both products equal 1/K to 1e-12.
inline CheckResult criterion_uncertainty_bounds() {
    detail::Gate g;
    const Params sets[] = {make_params(0.05, 0.1, 100.0), make_params(1e-3, 0.5, 10.0),
                           make_params(0.3, 1.0, 40.0)};
    const double tol = 1e-12;
    for (const Params& p : sets) {
        for (int i = 0; i <= 400; ++i) {
            const double t = 10.0 * p.tau_spr * i / 400.0;
            const EntanglementReport rep = uncertainty_products(p, TimePoint(t));
            const double invK = 1.0 / rep.K;
            const bool ok = rep.products.cond_ph >= rep.bounds.lower * (1.0 - tol) &&
                            rep.products.cond_ph < 1.0 &&
                            rep.products.cond_at <= invK * (1.0 + tol) && invK <= 1.0 + tol;
            g.require(ok, "bound violation at t=" + detail::num(t) +
                              " (eta0=" + detail::num(p.eta0) + ")");
        }
        const EntanglementReport rep0 = uncertainty_products(p, TimePoint(0.0));
        g.require(std::fabs(rep0.products.cond_ph - 1.0 / rep0.K) <= 1e-12 &&
                      std::fabs(rep0.products.cond_at - 1.0 / rep0.K) <= 1e-12,
                  "t=0 products equal 1/K (eta0=" + detail::num(p.eta0) + ")");
    }
    return {"uncertainty bounds over t in [0, 10 tau_spr]", g.ok, g.msg.str()};
}

// --- criterion 8: down-conversion limit ---------------------------------------
// beta = 1: R reduces to eta + 1/eta within 1e-12 relative.
inline CheckResult criterion_downconversion_limit() {
    detail::Gate g;
    for (int i = 0; i <= 48; ++i) {
        const double eta = std::pow(10.0, -6.0 + 12.0 * i / 48.0);
        const double R = r_parameter(make_params(eta, 1.0, 1.0), TimePoint(0.0));
        const double want = eta + 1.0 / eta;
        g.require(detail::rel_err(R, want) <= 1e-12, "beta=1 limit at eta=" + detail::num(eta));
    }
    return {"down-conversion limit (beta=1: R = eta + 1/eta)", g.ok, g.msg.str()};
}

// --- verification artifacts ---------------------------------------------------

// Data files the `verify` subcommand leaves behind; also the subject of
// the determinism criterion.  Everything below is a pure function of the
// pinned configuration.
inline void write_verify_artifacts(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    {  // relative-width curves, beta = 1e-8, log10 eta in [-20, 6]
        std::ostringstream os;
        os << "# command=widths, beta=1e-08, log10_eta=[-20,6], points=261\n";
        os << "log10_eta,rel_coinc_ph,rel_single_ph,rel_coinc_at,rel_single_at\n";
        for (int i = 0; i < 261; ++i) {
            const double lg = -20.0 + 26.0 * i / 260.0;
            const WidthReport r =
                analytic_coord_widths(make_params(std::pow(10.0, lg), 1e-8, 1.0), TimePoint(0.0));
            os << fmt17(lg) << "," << fmt17(r.rel_coinc_ph) << "," << fmt17(r.rel_single_ph)
               << "," << fmt17(r.rel_coinc_at) << "," << fmt17(r.rel_single_at) << "\n";
        }
        write_file(dir + "/widths_sweep.csv", os.str());
    }
    {  // R(eta) sweep, beta = 1e-4, with the closed-form minimum injected
        const double beta = 1e-4;
        std::vector<double> etas;
        for (int i = 0; i < 261; ++i) etas.push_back(std::pow(10.0, -8.0 + 16.0 * i / 260.0));
        etas.push_back(std::sqrt(beta));
        std::sort(etas.begin(), etas.end());
        std::ostringstream os;
        os << "# command=rsweep, beta=0.0001, log10_eta=[-8,8], points=" << etas.size() << "\n";
        os << "eta,R\n";
        for (double eta : etas) {
            os << fmt17(eta) << ","
               << fmt17(r_parameter(make_params(eta, beta, 1.0), TimePoint(0.0))) << "\n";
        }
        write_file(dir + "/rsweep.csv", os.str());
    }
    {  // 1D-analog density at the reference parameters
        const Params p = make_params(0.05, 0.1, 100.0);
        const TimePoint t(5.0);
        const DensityGrid d =
            sample_density(default_grid_full_1d(p, t, 256), t, p, CoordModel::full_1d);
        std::ostringstream os;
        write_density_csv(os, d, "verify reference density, grid=256");
        write_file(dir + "/density_full1d.csv", os.str());
    }
    {  // Schmidt report, eta0 = 0.05, beta = 0.01
        const Params p = make_params(0.05, 0.01, 100.0);
        const TimePoint t0(0.0);
        const AmplitudeGrid amp =
            sample_gaussian_amplitude(default_grid_gaussian_1d(p, t0, 256), t0, p);
        const SchmidtResult sr = schmidt_number_svd(amp);
        const AmplitudeGrid half =
            sample_gaussian_amplitude(default_grid_gaussian_1d(p, t0, 128), t0, p);
        const SchmidtResult sr_half = schmidt_number_svd(half);
        EntanglementReport rep = uncertainty_products(p, t0);
        rep.K = sr.K;
        rep.singular_spectrum = sr.spectrum;
        rep.tail_coverage_warning = sr.tail_coverage_warning;
        rep.grid_shift = std::fabs(sr.K - sr_half.K) / sr.K;
        write_file(dir + "/schmidt.json", to_json(rep).dump(2) + "\n");
    }
    {  // uncertainty products over t
        const Params p = make_params(0.05, 0.1, 100.0);
        std::ostringstream os;
        os << "# command=uncertainty, eta0=0.05, beta=0.1, tau_spr=100, t=[0,1000], points=201\n";
        os << "t,eta_t,R_t,K,cond_ph,cond_at,lower_bound\n";
        for (int i = 0; i <= 200; ++i) {
            const double t = 10.0 * p.tau_spr * i / 200.0;
            const EntanglementReport rep = uncertainty_products(p, TimePoint(t));
            os << fmt17(t) << "," << fmt17(eta_at(p, TimePoint(t))) << "," << fmt17(rep.R_t)
               << "," << fmt17(rep.K) << "," << fmt17(rep.products.cond_ph) << ","
               << fmt17(rep.products.cond_at) << "," << fmt17(rep.bounds.lower) << "\n";
        }
        write_file(dir + "/uncertainty.csv", os.str());
    }
}

// --- criterion 9: determinism --------------------------------------------------
inline CheckResult criterion_determinism(const std::string& scratch_dir) {
    namespace fs = std::filesystem;
    detail::Gate g;
    const std::string a = scratch_dir + "/run_a", b = scratch_dir + "/run_b";
    write_verify_artifacts(a);
    write_verify_artifacts(b);
    int compared = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
        const std::string name = entry.path().filename().string();
        const std::string other = b + "/" + name;
        g.require(fs::exists(other), "missing artifact " + name);
        if (fs::exists(other)) {
            g.require(read_file(entry.path().string()) == read_file(other),
                      "artifact differs between runs: " + name);
            ++compared;
        }
    }
    g.require(compared >= 5, "expected at least 5 artifacts, saw " + std::to_string(compared));
    return {"determinism (byte-identical artifacts across reruns)", g.ok, g.msg.str()};
}

inline std::vector<CheckResult> run_acceptance(const std::string& scratch_dir) {
    std::vector<CheckResult> results;
    results.push_back(criterion_normalization());
    results.push_back(criterion_gaussian_exactness());
    results.push_back(criterion_schmidt_identity());
    results.push_back(criterion_width_curves());
    results.push_back(criterion_r_curve());
    results.push_back(criterion_reciprocity());
    results.push_back(criterion_uncertainty_bounds());
    results.push_back(criterion_downconversion_limit());
    results.push_back(criterion_determinism(scratch_dir));
    return results;
}

}  // namespace atomphoton::verify

#endif
