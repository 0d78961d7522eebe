#include "tumor/diagnostics.hpp"

#include <cmath>

#include "tumor/stencil.hpp"

namespace tumor {

double total_energy(const State& s, const PenaltyParams& params) {
    const Grid& g = s.P.grid;
    ScalarField dens(g);
    const double cm = 1.0 / (params.m - 1.0);
    const double cb = params.delta > 0.0 ? params.delta / (params.beta - 1.0) : 0.0;
    for (std::size_t i = 0; i < g.cells; ++i) {
        double e = cm * (std::pow(s.P[i], params.m) + std::pow(s.Q[i], params.m) +
                         std::pow(s.D[i], params.m));
        if (cb > 0.0)
            e += cb * (std::pow(s.P[i], params.beta) + std::pow(s.Q[i], params.beta) +
                       std::pow(s.D[i], params.beta));
        double v2 = 0.0;
        for (int a = 0; a < g.dim; ++a) v2 += s.vel.at(a, i) * s.vel.at(a, i);
        e += 0.5 * (s.P[i] + s.Q[i] + s.D[i]) * v2;
        dens[i] = e;
    }
    return integrate(dens);
}

double leakage(const ScalarField& Z, const LevelSetField& phi, double w) {
    const Grid& g = Z.grid;
    ScalarField weighted(g);
    for (std::size_t i = 0; i < g.cells; ++i) {
        double r = phi.phi[i] / w;
        r = r < 0.0 ? 0.0 : (r > 1.0 ? 1.0 : r);
        weighted[i] = Z[i] * r;
    }
    return integrate(weighted);
}

double slip_norm_sq(const VectorField& v, const PrescribedMotion& V, double t,
                    const LevelSetField& phi, double w) {
    const Grid& g = v.grid;
    const ScalarField sdel = surface_delta(phi, w);
    const VectorField nrm = interface_normal(phi);
    ScalarField dens(g, 0.0);
    for (std::size_t i = 0; i < g.cells; ++i) {
        if (sdel[i] == 0.0) continue;
        const std::array<double, 3> Vx = V(t, g.cell_center(i));
        double slip = 0.0;
        for (int a = 0; a < g.dim; ++a) slip += (v.at(a, i) - Vx[a]) * nrm.at(a, i);
        dens[i] = slip * slip * sdel[i];
    }
    return integrate(dens);
}

double mass_budget_residual(const ScalarField& Z_old, const ScalarField& Z_new,
                            const ScalarField& effective_source_mass, double dt) {
    return std::fabs(integrate(Z_new) - integrate(Z_old) -
                     dt * integrate(effective_source_mass));
}

DiagnosticsRecord record(const State& s, const PrescribedMotion& V, const PenaltyParams& params,
                         double nutrient_budget, double mb_P, double mb_Q, double mb_D) {
    DiagnosticsRecord r;
    r.t = s.t;
    r.mass_P = integrate(s.P);
    r.mass_Q = integrate(s.Q);
    r.mass_D = integrate(s.D);
    r.mass_C = integrate(s.C);
    r.energy_total = total_energy(s, params);
    r.c_max = max_value(s.C);
    r.leakage_P = leakage(s.P, s.phi, params.w);
    r.leakage_Q = leakage(s.Q, s.phi, params.w);
    r.leakage_D = leakage(s.D, s.phi, params.w);
    r.leakage_C = leakage(s.C, s.phi, params.w);
    r.slip_norm_sq = slip_norm_sq(s.vel, V, s.t, s.phi, params.w);
    r.nutrient_budget = nutrient_budget;
    r.mass_budget_P = mb_P;
    r.mass_budget_Q = mb_Q;
    r.mass_budget_D = mb_D;
    return r;
}

} // namespace tumor
