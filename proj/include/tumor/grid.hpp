#ifndef TUMOR_GRID_HPP
#define TUMOR_GRID_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "tumor/errors.hpp"

namespace tumor {

/// Uniform cell-centered Cartesian grid over the reference box [-2R, 2R]^d.
/// Cell centers along each axis sit at x_i = -2R + (i + 1/2) h with h = 4R/N.
struct Grid {
    int dim = 2;             // spatial dimension, 2 or 3
    int n = 0;               // cells per axis
    double half_width = 0.0; // 2R: half the box edge length
    double h = 0.0;          // cell spacing, 4R/N
    std::size_t cells = 0;   // n^dim

    double center(int i) const { return -half_width + (i + 0.5) * h; }

    std::size_t stride(int axis) const {
        std::size_t s = 1;
        for (int a = 0; a < axis; ++a) s *= static_cast<std::size_t>(n);
        return s;
    }

    /// Coordinate index of a flat cell index along one axis.
    int coord(std::size_t c, int axis) const {
        std::size_t s = stride(axis);
        return static_cast<int>((c / s) % static_cast<std::size_t>(n));
    }

    std::array<double, 3> cell_center(std::size_t c) const {
        std::array<double, 3> x{0.0, 0.0, 0.0};
        for (int a = 0; a < dim; ++a) x[a] = center(coord(c, a));
        return x;
    }

    bool operator==(const Grid&) const = default;
};

/// Validated grid constructor. R is the tumor containment radius; the
/// reference box has half-width 2R so that everything moving stays inside
/// |x| < R with a full R of clearance to the walls.
Grid make_grid(double R, int N, int d);

/// One double per cell.
struct ScalarField {
    Grid grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0)
        : grid(g), values(g.cells, fill) {}

    double& operator[](std::size_t c) { return values[c]; }
    double operator[](std::size_t c) const { return values[c]; }
    std::size_t size() const { return values.size(); }
};

/// dim doubles per cell, stored component-major: component a occupies
/// values[a*cells .. (a+1)*cells).
struct VectorField {
    Grid grid;
    std::vector<double> values;

    VectorField() = default;
    explicit VectorField(const Grid& g, double fill = 0.0)
        : grid(g), values(g.cells * static_cast<std::size_t>(g.dim), fill) {}

    double& at(int comp, std::size_t c) {
        return values[static_cast<std::size_t>(comp) * grid.cells + c];
    }
    double at(int comp, std::size_t c) const {
        return values[static_cast<std::size_t>(comp) * grid.cells + c];
    }
};

} // namespace tumor

#endif
