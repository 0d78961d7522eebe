#include "tumor/reference.hpp"

#include <cmath>

#include "tumor/errors.hpp"

namespace tumor::serial {

namespace {
double hmean(double a, double b) {
    double s = a + b;
    return s > 0.0 ? 2.0 * a * b / s : 0.0;
}

// One-axis centered difference with one-sided ends, applied cell by cell.
double diff1(const double* f, std::size_t c, std::size_t s, int i, int n, double h) {
    if (i == 0) return (f[c + s] - f[c]) / h;
    if (i == n - 1) return (f[c] - f[c - s]) / h;
    return (f[c + s] - f[c - s]) / (2.0 * h);
}
} // namespace

VectorField gradient(const ScalarField& f) {
    const Grid& g = f.grid;
    VectorField out(g);
    for (int a = 0; a < g.dim; ++a) {
        const std::size_t s = g.stride(a);
        for (std::size_t c = 0; c < g.cells; ++c)
            out.at(a, c) = diff1(f.values.data(), c, s, g.coord(c, a), g.n, g.h);
    }
    return out;
}

ScalarField divergence(const VectorField& u) {
    const Grid& g = u.grid;
    ScalarField out(g, 0.0);
    for (int a = 0; a < g.dim; ++a) {
        const std::size_t s = g.stride(a);
        const double* ua = u.values.data() + static_cast<std::size_t>(a) * g.cells;
        for (std::size_t c = 0; c < g.cells; ++c)
            out[c] += diff1(ua, c, s, g.coord(c, a), g.n, g.h);
    }
    return out;
}

ScalarField variable_coeff_laplacian(const ScalarField& f, const ScalarField& a) {
    const Grid& g = f.grid;
    for (double v : a.values)
        if (v < 0.0) throw NumericalError("negative-coefficient in variable_coeff_laplacian");
    ScalarField out(g, 0.0);
    for (std::size_t c = 0; c < g.cells; ++c) {
        double acc = 0.0;
        for (int ax = 0; ax < g.dim; ++ax) {
            const std::size_t s = g.stride(ax);
            const int i = g.coord(c, ax);
            if (i == g.n - 1)
                acc += a[c] * (-2.0 * f[c]);
            else
                acc += hmean(a[c], a[c + s]) * (f[c + s] - f[c]);
            if (i == 0)
                acc += a[c] * (-2.0 * f[c]);
            else
                acc += hmean(a[c], a[c - s]) * (f[c - s] - f[c]);
        }
        out[c] = acc / (g.h * g.h);
    }
    return out;
}

ScalarField upwind_advect(const ScalarField& z, const VectorField& v, double dt) {
    const Grid& g = z.grid;
    ScalarField out = z;
    const double lam = dt / g.h;
    for (int ax = 0; ax < g.dim; ++ax) {
        const std::size_t s = g.stride(ax);
        const double* va = v.values.data() + static_cast<std::size_t>(ax) * g.cells;
        for (std::size_t c = 0; c < g.cells; ++c) {
            const int i = g.coord(c, ax);
            double f_hi, f_lo;
            if (i == g.n - 1) {
                const double u = va[c];
                f_hi = u >= 0.0 ? z[c] * u : 0.0;
            } else {
                const double u = 0.5 * (va[c] + va[c + s]);
                f_hi = u >= 0.0 ? z[c] * u : z[c + s] * u;
            }
            if (i == 0) {
                const double u = va[c];
                f_lo = u >= 0.0 ? 0.0 : z[c] * u;
            } else {
                const double u = 0.5 * (va[c - s] + va[c]);
                f_lo = u >= 0.0 ? z[c - s] * u : z[c] * u;
            }
            out[c] -= lam * (f_hi - f_lo);
        }
    }
    return out;
}

} // namespace tumor::serial
