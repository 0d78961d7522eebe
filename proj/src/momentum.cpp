#include "tumor/momentum.hpp"

#include <cmath>
#include <cstdint>

#include "tumor/errors.hpp"
#include "tumor/kinetics.hpp"
#include "tumor/stencil.hpp"

namespace tumor {

void PhysicalParams::validate() const {
    if (!(mu > 0)) throw ConfigError("mu must be positive");
    if (!(nu > 0)) throw ConfigError("nu must be positive");
    if (!(K_perm > 0)) throw ConfigError("permeability must be positive");
}

VectorField convective_flux_div(const ScalarField& rho, const VectorField& v) {
    const Grid& g = rho.grid;
    VectorField out(g, 0.0);
    for (int comp = 0; comp < g.dim; ++comp) {
        const double* vc = v.values.data() + static_cast<std::size_t>(comp) * g.cells;
        double* ov = out.values.data() + static_cast<std::size_t>(comp) * g.cells;
        const double* rv = rho.values.data();
        for (int ax = 0; ax < g.dim; ++ax) {
            const std::int64_t s = static_cast<std::int64_t>(g.stride(ax));
            const double* va = v.values.data() + static_cast<std::size_t>(ax) * g.cells;
            const int n = g.n;
            const double inv_h = 1.0 / g.h;
#pragma omp parallel for schedule(static)
            for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
                const int i = static_cast<int>((c / s) % n);
                double f_hi, f_lo;
                if (i == n - 1) {
                    const double u = va[c];
                    f_hi = u >= 0.0 ? rv[c] * vc[c] * u : 0.0;
                } else {
                    const double u = 0.5 * (va[c] + va[c + s]);
                    f_hi = u >= 0.0 ? rv[c] * vc[c] * u : rv[c + s] * vc[c + s] * u;
                }
                if (i == 0) {
                    const double u = va[c];
                    f_lo = u >= 0.0 ? 0.0 : rv[c] * vc[c] * u;
                } else {
                    const double u = 0.5 * (va[c - s] + va[c]);
                    f_lo = u >= 0.0 ? rv[c - s] * vc[c - s] * u : rv[c] * vc[c] * u;
                }
                ov[c] += (f_hi - f_lo) * inv_h;
            }
        }
    }
    return out;
}

VectorField recover_velocity(const VectorField& m, const ScalarField& rho, double rho_floor) {
    if (!(rho_floor > 0.0)) throw ConfigError("rho_floor must be positive");
    const Grid& g = rho.grid;
    VectorField out(g, 0.0);
    bool inconsistent = false;
#pragma omp parallel for schedule(static) reduction(|| : inconsistent)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        const auto i = static_cast<std::size_t>(c);
        double mmag = 0.0;
        for (int a = 0; a < g.dim; ++a) mmag += m.at(a, i) * m.at(a, i);
        mmag = std::sqrt(mmag);
        if (rho[i] < rho_floor) {
            if (rho[i] < rho_floor * rho_floor && mmag >= rho_floor) {
                inconsistent = true;
                continue;
            }
            if (mmag < rho_floor) continue; // vacuum cell: v stays 0
        }
        const double denom = rho[i] > rho_floor ? rho[i] : rho_floor;
        for (int a = 0; a < g.dim; ++a) out.at(a, i) = m.at(a, i) / denom;
    }
    if (inconsistent)
        throw NumericalError("momentum-in-vacuum: |m| >= rho_floor on a vacuum cell");
    return out;
}

namespace {

/// Point-implicit viscous update, componentwise: each new value is a convex
/// combination of the old cell value and its neighbors, so the update is
/// unconditionally stable and preserves a discrete maximum principle.
/// No-slip walls enter as zero-valued ghost neighbors with the doubled
/// Dirichlet face coefficient.
VectorField viscous_point_implicit(const VectorField& v, const ScalarField& mu_w,
                                   const ScalarField& rho_eff, double dt) {
    const Grid& g = v.grid;
    VectorField out(g);
    const double inv_h2 = 1.0 / (g.h * g.h);
    for (int comp = 0; comp < g.dim; ++comp) {
        const double* vc = v.values.data() + static_cast<std::size_t>(comp) * g.cells;
        double* ov = out.values.data() + static_cast<std::size_t>(comp) * g.cells;
#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
            const auto ci = static_cast<std::size_t>(c);
            double num = 0.0, den = 0.0;
            for (int ax = 0; ax < g.dim; ++ax) {
                const std::int64_t s = static_cast<std::int64_t>(g.stride(ax));
                const int i = static_cast<int>((c / s) % g.n);
                if (i < g.n - 1) {
                    const double a = detail::harmonic_mean(mu_w[ci], mu_w[ci + s]);
                    num += a * vc[c + s];
                    den += a;
                } else {
                    den += 2.0 * mu_w[ci];
                }
                if (i > 0) {
                    const double a = detail::harmonic_mean(mu_w[ci], mu_w[ci - s]);
                    num += a * vc[c - s];
                    den += a;
                } else {
                    den += 2.0 * mu_w[ci];
                }
            }
            const double r = dt * inv_h2 / rho_eff[ci];
            ov[c] = (vc[c] + r * num) / (1.0 + r * den);
        }
    }
    return out;
}

} // namespace

MomentumStep step_momentum(const State& s, const PhysicalParams& phys,
                           const PenaltyParams& params, const PrescribedMotion& V,
                           double t, double dt) {
    const Grid& g = s.P.grid;
    if (!(dt > 0.0)) throw NumericalError("step_momentum: dt must be positive");

    const ScalarField rho = total_density(s.P, s.Q, s.D);
    {
        double vmax = 0.0;
        for (std::size_t c = 0; c < g.cells; ++c) {
            double sum = 0.0;
            for (int a = 0; a < g.dim; ++a) sum += std::fabs(s.vel.at(a, c));
            vmax = sum > vmax ? sum : vmax;
        }
        if (dt * vmax / g.h > 1.0 + 1e-9)
            throw NumericalError("cfl-violation: dt too large for |v| in step_momentum");
    }

    const ScalarField sigma =
        pressure_sigma_delta(s.P, s.Q, s.D, params.m, params.delta, params.beta);
    const VectorField gsig = gradient(sigma);
    const VectorField conv = convective_flux_div(rho, s.vel);
    const ScalarField mu_w = coefficient_profile(s.phi, phys.mu, params.omega, params.w);
    const ScalarField sdel = surface_delta(s.phi, params.w);
    const VectorField nrm = interface_normal(s.phi);

    ScalarField rho_eff(g);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        const auto i = static_cast<std::size_t>(c);
        rho_eff[i] = rho[i] > params.rho_vac ? rho[i] : params.rho_vac;
    }

    // Explicit convection + pressure gradient in velocity form.
    VectorField vstar(g);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        const auto i = static_cast<std::size_t>(c);
        for (int a = 0; a < g.dim; ++a)
            vstar.at(a, i) = s.vel.at(a, i) - dt * (conv.at(a, i) + gsig.at(a, i)) / rho_eff[i];
    }

    vstar = viscous_point_implicit(vstar, mu_w, rho_eff, dt);

    // Per-cell implicit Darcy drag + boundary penalty, linear in v:
    //   (A + b) v'_tan = A v*_tan,  (A + b + c) v'_n = A v*_n + c V.n,
    // with A = rho_eff/dt, b = mu_w/K, c = surface_delta/epsilon.
    MomentumStep out{VectorField(g), VectorField(g)};
    const double inv_K = 1.0 / phys.K_perm;
    const double inv_eps = 1.0 / params.epsilon;
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        const auto i = static_cast<std::size_t>(c);
        const double A = rho_eff[i] / dt;
        const double b = mu_w[i] * inv_K;
        const double cp = sdel[i] * inv_eps;
        double vn = 0.0, Vn = 0.0;
        std::array<double, 3> Vx{0.0, 0.0, 0.0};
        if (cp > 0.0) {
            Vx = V(t, g.cell_center(i));
            for (int a = 0; a < g.dim; ++a) {
                vn += vstar.at(a, i) * nrm.at(a, i);
                Vn += Vx[a] * nrm.at(a, i);
            }
        }
        const double tan_fac = A / (A + b);
        const double vn_new = (A * vn + cp * Vn) / (A + b + cp);
        for (int a = 0; a < g.dim; ++a) {
            const double tang = vstar.at(a, i) - vn * nrm.at(a, i);
            const double vnew = tan_fac * tang + vn_new * nrm.at(a, i);
            out.vel.at(a, i) = vnew;
            out.mom.at(a, i) = rho[i] * vnew;
        }
    }
    if (!all_finite(out.vel) || !all_finite(out.mom))
        throw NumericalError("nonfinite-field after step_momentum");
    return out;
}

} // namespace tumor
