#ifndef ATOMPHOTON_GRID_HPP
#define ATOMPHOTON_GRID_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "atomphoton/params.hpp"

namespace atomphoton {

// Rectangular cell-centered sampling grid.  Nodes sit at cell centers:
//   x_i = x_min + (i + 1/2) * dx,   dx = (x_max - x_min) / nx
// so a plain sum of node values times dx*dy is a midpoint quadrature of
// the covered rectangle.
struct Grid2D {
    int nx = 0, ny = 0;
    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;

    static Grid2D make(int nx, int ny, double x_min, double x_max, double y_min,
                       double y_max) {
        if (nx < 2 || ny < 2)
            throw std::domain_error("Grid2D: point counts must be >= 2");
        if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_min) ||
            !std::isfinite(y_max))
            throw std::domain_error("Grid2D: extents must be finite");
        if (!(x_max > x_min) || !(y_max > y_min))
            throw std::domain_error("Grid2D: extents must satisfy max > min");
        return Grid2D{nx, ny, x_min, x_max, y_min, y_max};
    }

    double dx() const { return (x_max - x_min) / nx; }
    double dy() const { return (y_max - y_min) / ny; }
    double x(int i) const { return x_min + (i + 0.5) * dx(); }
    double y(int j) const { return y_min + (j + 0.5) * dy(); }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
};

// Provenance carried by every sampled grid; echoed into file headers.
struct GridMeta {
    std::string model;  // full_1d | gaussian_1d | momentum_lorentz | momentum_gauss
    double eta0 = 0, beta = 0, tau_spr = 0, t = 0;
    double rel_width = 1.0;  // Gaussian-model photon width A (units c/gamma)
    bool two_sided = false;
    std::string axis_x = "x_at";  // row coordinate
    std::string axis_y = "x_ph";  // column coordinate
};

// Real non-negative density sampled on a Grid2D.  Row-major: index(i,j)
// walks j fastest, i labels the x (atom / u) coordinate.
struct DensityGrid {
    Grid2D grid;
    GridMeta meta;
    std::vector<double> values;

    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.ny + j]; }
    double& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid.ny + j]; }

    // Midpoint quadrature of the sampled density over the grid rectangle.
    double quadrature_sum() const {
        double s = 0.0;
        for (double v : values) s += v;
        return s * grid.dx() * grid.dy();
    }

    // Invariants: finite non-negative samples, total mass <= 1 + tol.
    void validate(double tol = 0.02) const {
        if (values.size() != grid.size())
            throw std::runtime_error("DensityGrid: value count does not match grid");
        for (double v : values)
            if (!std::isfinite(v) || v < 0.0)
                throw std::runtime_error("DensityGrid: values must be finite and >= 0");
        if (quadrature_sum() > 1.0 + tol)
            throw std::runtime_error("DensityGrid: quadrature sum exceeds 1 + tolerance");
    }
};

// Complex amplitude sampled on a Grid2D, same layout as DensityGrid.
struct AmplitudeGrid {
    Grid2D grid;
    GridMeta meta;
    std::vector<std::complex<double>> values;

    std::complex<double> at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * grid.ny + j];
    }
    std::complex<double>& at(int i, int j) {
        return values[static_cast<std::size_t>(i) * grid.ny + j];
    }

    double squared_norm() const {
        double s = 0.0;
        for (const auto& v : values) s += std::norm(v);
        return s * grid.dx() * grid.dy();
    }
};

// Uniformly sampled 1D profile (a grid slice or marginal), cell-centered
// like Grid2D.
struct Profile1D {
    double x0 = 0;  // first node
    double dx = 0;
    std::vector<double> v;

    double x(int i) const { return x0 + i * dx; }
    double mass() const {
        double s = 0.0;
        for (double w : v) s += w;
        return s * dx;
    }
};

enum class Axis { x, y };

}  // namespace atomphoton

#endif
