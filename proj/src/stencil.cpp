#include "tumor/stencil.hpp"

#include <cmath>
#include <cstdint>

namespace tumor {

double integrate(const ScalarField& f) {
    // Serial accumulation: the sum order is part of the determinism contract.
    double s = 0.0;
    for (double v : f.values) s += v;
    double hd = 1.0;
    for (int a = 0; a < f.grid.dim; ++a) hd *= f.grid.h;
    return s * hd;
}

double max_value(const ScalarField& f) {
    double m = -HUGE_VAL;
    for (double v : f.values) m = v > m ? v : m;
    return m;
}

double min_value(const ScalarField& f) {
    double m = HUGE_VAL;
    for (double v : f.values) m = v < m ? v : m;
    return m;
}

bool all_finite(const ScalarField& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) return false;
    return true;
}

bool all_finite(const VectorField& u) {
    for (double v : u.values)
        if (!std::isfinite(v)) return false;
    return true;
}

VectorField gradient(const ScalarField& f) {
    const Grid& g = f.grid;
    VectorField out(g);
    const int n = g.n;
    for (int a = 0; a < g.dim; ++a) {
        const std::int64_t s = static_cast<std::int64_t>(g.stride(a));
        const double* fv = f.values.data();
        double* ov = out.values.data() + static_cast<std::size_t>(a) * g.cells;
#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
            const int i = static_cast<int>((c / s) % n);
            if (i == 0)
                ov[c] = (fv[c + s] - fv[c]) / g.h;
            else if (i == n - 1)
                ov[c] = (fv[c] - fv[c - s]) / g.h;
            else
                ov[c] = (fv[c + s] - fv[c - s]) / (2.0 * g.h);
        }
    }
    return out;
}

ScalarField divergence(const VectorField& u) {
    const Grid& g = u.grid;
    ScalarField out(g, 0.0);
    const int n = g.n;
    for (int a = 0; a < g.dim; ++a) {
        const std::int64_t s = static_cast<std::int64_t>(g.stride(a));
        const double* uv = u.values.data() + static_cast<std::size_t>(a) * g.cells;
        double* ov = out.values.data();
#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
            const int i = static_cast<int>((c / s) % n);
            if (i == 0)
                ov[c] += (uv[c + s] - uv[c]) / g.h;
            else if (i == n - 1)
                ov[c] += (uv[c] - uv[c - s]) / g.h;
            else
                ov[c] += (uv[c + s] - uv[c - s]) / (2.0 * g.h);
        }
    }
    return out;
}

ScalarField variable_coeff_laplacian(const ScalarField& f, const ScalarField& a) {
    const Grid& g = f.grid;
    for (double v : a.values)
        if (v < 0.0) throw NumericalError("negative-coefficient in variable_coeff_laplacian");

    ScalarField out(g, 0.0);
    const int n = g.n;
    const double* fv = f.values.data();
    const double* av = a.values.data();
    double* ov = out.values.data();
    const int dim = g.dim;
    std::int64_t strides[3] = {1, n, static_cast<std::int64_t>(n) * n};

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        double acc = 0.0;
        for (int ax = 0; ax < dim; ++ax) {
            const std::int64_t s = strides[ax];
            const int i = static_cast<int>((c / s) % n);
            // high face flux: a_face (f_hi - f_c) / h
            if (i == n - 1)
                acc += av[c] * (-2.0 * fv[c]); // ghost = -f_c, Dirichlet 0 on the wall
            else
                acc += detail::harmonic_mean(av[c], av[c + s]) * (fv[c + s] - fv[c]);
            // low face flux (enters with opposite sign)
            if (i == 0)
                acc += av[c] * (-2.0 * fv[c]);
            else
                acc += detail::harmonic_mean(av[c], av[c - s]) * (fv[c - s] - fv[c]);
        }
        ov[c] = acc / (g.h * g.h);
    }
    return out;
}

double dirichlet_energy(const ScalarField& f, const ScalarField& a) {
    const Grid& g = f.grid;
    const int n = g.n;
    const double* fv = f.values.data();
    const double* av = a.values.data();
    double hd = 1.0;
    for (int ax = 0; ax < g.dim; ++ax) hd *= g.h;
    const double inv_h2 = 1.0 / (g.h * g.h);

    double e = 0.0; // serial: deterministic
    for (std::size_t c = 0; c < g.cells; ++c) {
        for (int ax = 0; ax < g.dim; ++ax) {
            const std::size_t s = g.stride(ax);
            const int i = g.coord(c, ax);
            if (i < n - 1) {
                const double df = fv[c + s] - fv[c];
                e += detail::harmonic_mean(av[c], av[c + s]) * df * df;
            } else {
                e += 2.0 * av[c] * fv[c] * fv[c]; // wall face, ghost = -f_c
            }
            if (i == 0) e += 2.0 * av[c] * fv[c] * fv[c];
        }
    }
    return e * inv_h2 * hd;
}

} // namespace tumor
