#include <doctest.h>

#include <cmath>
#include <vector>

#include "atomphoton/coordinate.hpp"
#include "atomphoton/quadrature.hpp"
#include "atomphoton/widths.hpp"

using namespace atomphoton;

namespace {
const Params kRef = make_params(0.05, 0.1, 100.0);

// spherical quadrature of a density that depends on one 3-vector
template <class F>
double spherical_integral(F&& f, double r_max, int nr, int nth, int nphi) {
    const GaussLegendre glr(nr), glt(nth);
    double total = 0.0;
    for (int ir = 0; ir < nr; ++ir) {
        const double r = 0.5 * r_max * (1.0 + glr.x[ir]);
        const double wr = 0.5 * r_max * glr.w[ir] * r * r;
        for (int it = 0; it < nth; ++it) {
            const double c = glt.x[it];
            const double s = std::sqrt(1.0 - c * c);
            for (int ip = 0; ip < nphi; ++ip) {
                const double phi = 2.0 * M_PI * (ip + 0.5) / nphi;
                total += wr * glt.w[it] * (2.0 * M_PI / nphi) *
                         f(Vec3{r * s * std::cos(phi), r * s * std::sin(phi), r * c});
            }
        }
    }
    return total;
}
}  // namespace

TEST_CASE("photon proto-packet: edge value, causality, singularity floor") {
    const TimePoint t(7.0);
    // equatorial point on the light cone: 3 / (8 pi t^2), unit exponential
    const double v = photon_proto_density_3d(Vec3{7.0, 0.0, 0.0}, t, kRef);
    CHECK(v == doctest::Approx(3.0 / (8.0 * M_PI * 49.0)).epsilon(1e-14));
    // polar direction: dipole node
    CHECK(photon_proto_density_3d(Vec3{0.0, 0.0, 3.0}, t, kRef) == 0.0);
    // outside the light cone
    CHECK(photon_proto_density_3d(Vec3{7.1, 0.0, 0.0}, t, kRef) == 0.0);
    CHECK(photon_proto_density_3d(Vec3{5.0, 5.0, 1.0}, t, kRef) == 0.0);
    CHECK_THROWS_AS(photon_proto_density_3d(Vec3{1e-13, 0.0, 0.0}, t, kRef),
                    singularity_error);
}

TEST_CASE("photon proto-packet integrates to 1 - e^-t") {
    const TimePoint t(20.0);
    const double total = spherical_integral(
        [&](Vec3 r) { return photon_proto_density_3d(r, t, kRef); }, t.value, 64, 24, 4);
    CHECK(total == doctest::Approx(-std::expm1(-20.0)).epsilon(1e-6));
}

TEST_CASE("atom proto-packet: peak value, normalization, 1/e width") {
    const TimePoint t0(0.0);
    // (1/(sqrt(pi) * 0.05))^3 = 8000 / pi^{3/2}
    const double peak = atom_proto_density_3d(Vec3{0, 0, 0}, t0, kRef);
    CHECK(peak == doctest::Approx(8000.0 / std::pow(M_PI, 1.5)).epsilon(1e-13));
    CHECK(peak == doctest::Approx(1436.697).epsilon(1e-5));

    const TimePoint t(40.0);
    const double a = packet_width_a(kRef, t);
    const double total = spherical_integral(
        [&](Vec3 r) { return atom_proto_density_3d(r, t, kRef); }, 10.0 * a, 48, 16, 4);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));

    const double at_width = atom_proto_density_3d(Vec3{a, 0, 0}, t, kRef);
    CHECK(at_width == doctest::Approx(atom_proto_density_3d(Vec3{0, 0, 0}, t, kRef) /
                                      M_E).epsilon(1e-12));
}

TEST_CASE("entangled argument") {
    const Params p = make_params(0.05, 0.1, 100.0);
    const Vec3 v{0.3, -1.2, 2.0};
    const Vec3 same = entangled_argument(v, v, p);
    CHECK(same.x == doctest::Approx(v.x).epsilon(1e-15));
    CHECK(same.y == doctest::Approx(v.y).epsilon(1e-15));
    CHECK(same.z == doctest::Approx(v.z).epsilon(1e-15));

    const Params dc = make_params(0.05, 1.0, 100.0);  // down-conversion limit
    const Vec3 r = entangled_argument(Vec3{9, 9, 9}, Vec3{1, 2, 3}, dc);
    CHECK(r.x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.z == doctest::Approx(3.0).epsilon(1e-15));

    const Vec3 w = entangled_argument(Vec3{1, 0, 0}, Vec3{0, 0, 0}, p);
    CHECK(w.x == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(w.y == 0.0);
}

TEST_CASE("3d joint density: causality and factorized small-atom limit") {
    const TimePoint t(10.0);
    CHECK(joint_density_3d(Vec3{0, 0, 0.1}, Vec3{11.0, 0, 0.1}, t, kRef) == 0.0);

    // tiny initial packet, tiny recoil: the atomic factor pins r_at near 0
    const Params lim = make_params(1e-6, 1e-9, 100.0);
    const double a = packet_width_a(lim, t);
    const Vec3 r_ph{5.0, 0.0, 0.0};
    const double on_axis = joint_density_3d(Vec3{0, 0, 0}, r_ph, t, lim);
    const double shifted = joint_density_3d(Vec3{0, 0, 2.0 * a}, r_ph, t, lim);
    CHECK(shifted / on_axis == doctest::Approx(std::exp(-4.0)).epsilon(1e-2));
}

TEST_CASE("3d joint density double quadrature equals 1 - e^-t") {
    const TimePoint t(20.0);
    const double a = packet_width_a(kRef, t);
    const GaussLegendre gl_rho(40), gl_R(24), gl_th(12);
    double total = 0.0;
    for (std::size_t ir = 0; ir < gl_rho.x.size(); ++ir) {
        const double rho_r = 0.5 * t.value * (1.0 + gl_rho.x[ir]);
        const double w_rho_r = 0.5 * t.value * gl_rho.w[ir] * rho_r * rho_r;
        for (std::size_t it = 0; it < gl_th.x.size(); ++it) {
            const double c = gl_th.x[it], s = std::sqrt(1.0 - c * c);
            const Vec3 rho{rho_r * s, 0.0, rho_r * c};
            const double w1 = w_rho_r * gl_th.w[it] * 2.0 * M_PI;  // azimuth symmetric
            for (std::size_t jr = 0; jr < gl_R.x.size(); ++jr) {
                const double R_r = 5.0 * a * (1.0 + gl_R.x[jr]);
                const double w_R = 5.0 * a * gl_R.w[jr] * R_r * R_r;
                for (std::size_t jt = 0; jt < gl_th.x.size(); ++jt) {
                    const double c2 = gl_th.x[jt], s2 = std::sqrt(1.0 - c2 * c2);
                    const Vec3 R{R_r * s2, 0.0, R_r * c2};
                    const Vec3 r_at = R - kRef.beta * rho;
                    const Vec3 r_ph = R + (1.0 - kRef.beta) * rho;
                    total += w1 * w_R * gl_th.w[jt] * 2.0 * M_PI *
                             joint_density_3d(r_at, r_ph, t, kRef);
                }
            }
        }
    }
    CHECK(total == doctest::Approx(-std::expm1(-20.0)).epsilon(1e-3));
}

TEST_CASE("1d analog: support, exact normalization, ridge at u = t") {
    const TimePoint t(5.0);
    CHECK(joint_density_1d(0.0, -0.1, t, kRef) == 0.0);   // u < 0
    CHECK(joint_density_1d(0.0, 5.2, t, kRef) == 0.0);    // u > t
    CHECK(joint_density_1d(-0.2, 4.79, t, kRef) > 0.0);

    // quadrature in the (u, X) variables, unit Jacobian
    const double a = packet_width_a(kRef, t);
    const GaussLegendre gl(96);
    double total = 0.0;
    for (std::size_t iu = 0; iu < gl.x.size(); ++iu) {
        const double u = 0.5 * t.value * (1.0 + gl.x[iu]);
        for (std::size_t ix = 0; ix < gl.x.size(); ++ix) {
            const double X = 10.0 * a * gl.x[ix];
            total += 0.5 * t.value * gl.w[iu] * 10.0 * a * gl.w[ix] *
                     joint_density_1d(X - kRef.beta * u, X + (1.0 - kRef.beta) * u, t, kRef);
        }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));

    // the exponential edge dominates: density rises toward u = t at fixed X
    const double near_edge = joint_density_1d(-kRef.beta * 4.999, (1.0 - kRef.beta) * 4.999,
                                              t, kRef);
    const double mid = joint_density_1d(-kRef.beta * 2.5, (1.0 - kRef.beta) * 2.5, t, kRef);
    CHECK(near_edge > mid);
}

TEST_CASE("1d analog: two-sided variant is symmetric and normalized") {
    const TimePoint t(5.0);
    const double a = packet_width_a(kRef, t);
    // X is even in this configuration, so u -> -u leaves the density unchanged
    CHECK(joint_density_1d(0.0, 1.0, t, kRef, true) ==
          doctest::Approx(joint_density_1d(0.0, -1.0, t, kRef, true)).epsilon(1e-12));
    CHECK(joint_density_1d(0.0, 1.0, t, kRef, true) > 0.0);
    // |u| kinks at 0: integrate the two halves separately
    const GaussLegendre gl(96);
    double total = 0.0;
    for (int half = 0; half < 2; ++half) {
        const double sign = half == 0 ? -1.0 : 1.0;
        for (std::size_t iu = 0; iu < gl.x.size(); ++iu) {
            const double u = sign * 0.5 * t.value * (1.0 + gl.x[iu]);
            for (std::size_t ix = 0; ix < gl.x.size(); ++ix) {
                const double X = 10.0 * a * gl.x[ix];
                total += 0.5 * t.value * gl.w[iu] * 10.0 * a * gl.w[ix] *
                         joint_density_1d(X - kRef.beta * u, X + (1.0 - kRef.beta) * u, t,
                                          kRef, true);
            }
        }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("Jacobian identity: (x_at, x_ph) and (u, X) quadratures agree") {
    // composite rule: the Gaussian factor is narrow against the causal band
    const GaussLegendre gl(32);
    auto composite = [&](auto&& f, double a, double b, int panels) {
        double s = 0.0;
        for (int k = 0; k < panels; ++k)
            s += gauss_integrate(f, a + (b - a) * k / panels, a + (b - a) * (k + 1) / panels,
                                 gl);
        return s;
    };

    for (double beta : {0.01, 0.37, 1.0}) {
        const Params p = make_params(0.2, beta, 50.0);
        const TimePoint t(6.0);
        const double a = packet_width_a(p, t);

        const double in_uX = composite(
            [&](double u) {
                return composite(
                    [&](double X) {
                        return joint_density_1d(X - beta * u, X + (1.0 - beta) * u, t, p);
                    },
                    -10.0 * a, 10.0 * a, 8);
            },
            0.0, t.value, 8);

        // column-wise in particle coordinates: x_ph runs over the causal
        // band [x_at, x_at + t] at each x_at
        const double lo = -10.0 * a - beta * t.value, hi = 10.0 * a;
        const double in_xy = composite(
            [&](double xa) {
                return composite([&](double xp) { return joint_density_1d(xa, xp, t, p); },
                                 xa, xa + t.value, 12);
            },
            lo, hi, 12);

        CHECK(in_uX == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(in_xy == doctest::Approx(in_uX).epsilon(1e-9));
    }
}

TEST_CASE("gaussian model: normalization and conditional width") {
    const Params p = make_params(0.05, 0.1, 100.0);
    const TimePoint t0(0.0);

    const GaussLegendre gl(80);
    double total = 0.0;
    for (std::size_t iu = 0; iu < gl.x.size(); ++iu) {
        const double u = 12.0 * gl.x[iu];
        for (std::size_t ix = 0; ix < gl.x.size(); ++ix) {
            const double X = 10.0 * p.eta0 * gl.x[ix];
            const double amp = gaussian_model_amplitude_1d(X - p.beta * u,
                                                           X + (1.0 - p.beta) * u, t0, p);
            total += 12.0 * gl.w[iu] * 10.0 * p.eta0 * gl.w[ix] * amp * amp;
        }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));

    // conditional photon slice at x_at = 0: width A*eta/sqrt(eta^2+beta^2)
    Profile1D slice;
    slice.x0 = -6.0;
    slice.dx = 12.0 / 4000;
    slice.v.resize(4001);
    for (int k = 0; k <= 4000; ++k) {
        const double xp = slice.x(k);
        const double amp = gaussian_model_amplitude_1d(0.0, xp, t0, p);
        slice.v[k] = amp * amp;
    }
    CHECK(standardized_width(slice) == doctest::Approx(0.4472135955).epsilon(1e-4));

    CHECK_THROWS_AS(gaussian_model_amplitude_1d(0, 0, t0, p, -1.0), std::domain_error);
}

TEST_CASE("sample_density: support, mass, metadata, determinism") {
    const TimePoint t(5.0);
    const Grid2D g = default_grid_full_1d(kRef, t, 512);
    const DensityGrid d = sample_density(g, t, kRef, CoordModel::full_1d);
    d.validate();
    CHECK(d.meta.model == "full_1d");
    CHECK(d.meta.eta0 == kRef.eta0);
    CHECK(d.meta.t == t.value);

    for (int i = 0; i < g.nx; i += 7) {
        for (int j = 0; j < g.ny; j += 7) {
            const double u = g.y(j) - g.x(i);
            if (u < 0.0 || u > t.value) CHECK(d.at(i, j) == 0.0);
        }
    }
    CHECK(d.quadrature_sum() == doctest::Approx(1.0).epsilon(1e-3));

    const DensityGrid gauss = sample_density(default_grid_gaussian_1d(kRef, t, 512), t, kRef,
                                             CoordModel::gaussian_1d);
    CHECK(gauss.quadrature_sum() == doctest::Approx(1.0).epsilon(1e-3));

    const DensityGrid again = sample_density(g, t, kRef, CoordModel::full_1d);
    CHECK(again.values == d.values);
}

TEST_CASE("gaussian_1d and full_1d marginal photon widths agree for wide packets") {
    // eta >> 1: both marginals are dominated by the wide Gaussian factor
    const Params p = make_params(30.0, 0.1, 100.0);
    const TimePoint t(5.0);
    const DensityGrid full =
        sample_density(default_grid_full_1d(p, t, 512), t, p, CoordModel::full_1d);
    const DensityGrid gauss =
        sample_density(default_grid_gaussian_1d(p, t, 512), t, p, CoordModel::gaussian_1d);
    const double wf = marginal_width(full, Axis::y);
    const double wg = marginal_width(gauss, Axis::y);
    CHECK(std::fabs(wf - wg) / wg < 0.10);
}

TEST_CASE("factorization: gaussian model at beta -> 0, a0 -> 0 is a product of marginals") {
    // both limits matter: the atomic factor must pin x_at so the photon
    // factor f(x_ph - x_at) loses its x_at dependence, and beta must be
    // small against a/A (the entangled argument amplifies beta by 1/a)
    const Params p = make_params(5e-7, 1e-13, 100.0);
    const TimePoint t0(0.0);
    const DensityGrid d = sample_density(default_grid_gaussian_1d(p, t0, 128), t0, p,
                                         CoordModel::gaussian_1d);
    const Profile1D mx = grid_marginal(d, Axis::x);
    const Profile1D my = grid_marginal(d, Axis::y);
    const double mass = d.quadrature_sum();
    double peak = 0.0;
    for (double v : d.values) peak = std::max(peak, v);
    for (int i = 0; i < d.grid.nx; i += 3)
        for (int j = 0; j < d.grid.ny; j += 3)
            CHECK(std::fabs(d.at(i, j) - mx.v[i] * my.v[j] / mass) <= 1e-6 * peak);
}
