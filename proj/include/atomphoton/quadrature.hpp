#ifndef ATOMPHOTON_QUADRATURE_HPP
#define ATOMPHOTON_QUADRATURE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace atomphoton {

/** n-point Gauss-Legendre rule on [-1,1]; integrates polynomials of
 *  degree < 2n exactly.  Nodes by Newton iteration on P_n. */
struct GaussLegendre {
    std::vector<double> x, w;

    explicit GaussLegendre(int n) : x(n), w(n) {
        if (n < 1) throw std::domain_error("GaussLegendre: need n >= 1");
        const double eps = 1e-15;
        const int m = (n + 1) / 2;
        for (int i = 0; i < m; ++i) {
            double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p1 = 1.0, p2 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
                }
                pp = n * (z * p1 - p2) / (z * z - 1.0);
                double z1 = z;
                z = z1 - p1 / pp;
                if (std::fabs(z - z1) < eps) break;
            }
            x[i] = -z;
            x[n - 1 - i] = z;
            w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
            w[n - 1 - i] = w[i];
        }
    }
};

// Integral of f over [a,b] with an n-point rule.
template <class F>
double gauss_integrate(F&& f, double a, double b, const GaussLegendre& rule) {
    const double c = 0.5 * (b - a), m = 0.5 * (a + b);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * f(m + c * rule.x[i]);
    return c * s;
}

template <class F>
double gauss_integrate(F&& f, double a, double b, int n = 64) {
    return gauss_integrate(f, a, b, GaussLegendre(n));
}

}  // namespace atomphoton

#endif
