#include "tumor/transport.hpp"

#include <cmath>
#include <cstdint>

#include "tumor/errors.hpp"

namespace tumor {

namespace {
double max_axis_speed_sum(const VectorField& v) {
    const Grid& g = v.grid;
    double m = 0.0;
    for (std::size_t c = 0; c < g.cells; ++c) {
        double s = 0.0;
        for (int a = 0; a < g.dim; ++a) s += std::fabs(v.at(a, c));
        m = s > m ? s : m;
    }
    return m;
}
} // namespace

ScalarField upwind_advect(const ScalarField& z, const VectorField& v, double dt) {
    const Grid& g = z.grid;
    if (!(dt > 0.0)) throw NumericalError("upwind_advect: dt must be positive");
    if (dt * max_axis_speed_sum(v) / g.h > 1.0 + 1e-9)
        throw NumericalError("cfl-violation: dt too large for |v| in upwind_advect");

    ScalarField out = z;
    const double lam = dt / g.h;
    for (int ax = 0; ax < g.dim; ++ax) {
        const std::int64_t s = static_cast<std::int64_t>(g.stride(ax));
        const double* va = v.values.data() + static_cast<std::size_t>(ax) * g.cells;
        const double* zv = z.values.data();
        double* ov = out.values.data();
        const int n = g.n;
#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
            const int i = static_cast<int>((c / s) % n);
            double f_hi, f_lo;
            if (i == n - 1) {
                const double u = va[c];
                f_hi = u >= 0.0 ? zv[c] * u : 0.0;
            } else {
                const double u = 0.5 * (va[c] + va[c + s]);
                f_hi = u >= 0.0 ? zv[c] * u : zv[c + s] * u;
            }
            if (i == 0) {
                const double u = va[c];
                f_lo = u >= 0.0 ? 0.0 : zv[c] * u;
            } else {
                const double u = 0.5 * (va[c - s] + va[c]);
                f_lo = u >= 0.0 ? zv[c - s] * u : zv[c] * u;
            }
            ov[c] -= lam * (f_hi - f_lo);
        }
    }
    return out;
}

SpeciesStep step_species(const ScalarField& P, const ScalarField& Q, const ScalarField& D,
                         const ScalarField& C, const VectorField& v, double dt,
                         const RateConstants& k) {
    SpeciesStep out{upwind_advect(P, v, dt), upwind_advect(Q, v, dt), upwind_advect(D, v, dt)};
    const Grid& g = P.grid;
    const double gD = std::exp(rate_coeff_D(0.0, k) * dt); // F_D is C-independent
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        const auto i = static_cast<std::size_t>(c);
        out.P[i] *= std::exp(rate_coeff_P(C[i], k) * dt);
        out.Q[i] *= std::exp(rate_coeff_Q(C[i], k) * dt);
        out.D[i] *= gD;
    }
    return out;
}

double cfl_timestep(const VectorField& v, double h, double cfl) {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
    const double speed = max_axis_speed_sum(v);
    return cfl * h / (speed > kVelocityFloor ? speed : kVelocityFloor);
}

} // namespace tumor
