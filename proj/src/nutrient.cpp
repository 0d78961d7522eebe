#include "tumor/nutrient.hpp"

#include <cmath>
#include <cstdint>

#include "tumor/stencil.hpp"

namespace tumor {

int nutrient_substeps(const Grid& g, double max_coeff, double dt) {
    if (max_coeff <= 0.0) return 1;
    // Bound covering corner cells, whose Dirichlet wall faces carry the
    // double-strength coefficient: per axis at most 3a/h^2.
    const double dt_stable = g.h * g.h / (3.0 * g.dim * max_coeff);
    return dt > dt_stable ? static_cast<int>(std::ceil(dt / dt_stable)) : 1;
}

ScalarField step_nutrient(const ScalarField& C, const LevelSetField& phi, double nu,
                          const PenaltyParams& params, double dt) {
    if (!(dt > 0.0)) throw NumericalError("step_nutrient: dt must be positive");
    const Grid& g = C.grid;
    const ScalarField nu_w = coefficient_profile(phi, nu, params.omega, params.w);
    const int nsub = nutrient_substeps(g, max_value(nu_w), dt);
    const double dts = dt / nsub;
    const double decay = std::exp(-dts);

    ScalarField cur = C;
    for (int s = 0; s < nsub; ++s) {
        ScalarField lap = variable_coeff_laplacian(cur, nu_w);
#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
            const auto i = static_cast<std::size_t>(c);
            cur[i] = (cur[i] + dts * lap[i]) * decay;
        }
    }
    return cur;
}

double nutrient_budget_residual(const ScalarField& C_old, const ScalarField& C_new,
                                const LevelSetField& phi, double nu,
                                const PenaltyParams& params, double dt) {
    const Grid& g = C_old.grid;
    const ScalarField nu_w = coefficient_profile(phi, nu, params.omega, params.w);
    ScalarField mid(g), sq_new(g), sq_old(g), sq_mid(g);
    for (std::size_t i = 0; i < g.cells; ++i) {
        mid[i] = 0.5 * (C_old[i] + C_new[i]);
        sq_new[i] = C_new[i] * C_new[i];
        sq_old[i] = C_old[i] * C_old[i];
        sq_mid[i] = mid[i] * mid[i];
    }
    const double dE = 0.5 * (integrate(sq_new) - integrate(sq_old)) / dt;
    const double sink = integrate(sq_mid) + dirichlet_energy(mid, nu_w);
    return std::fabs(dE + sink);
}

bool check_max_principle(const ScalarField& C, double C0_max, double C_bar) {
    const double bound = C0_max > C_bar ? C0_max : C_bar;
    const double tol = 1e-12 * (bound > 0.0 ? bound : 1.0);
    return min_value(C) >= -tol && max_value(C) <= bound + tol;
}

} // namespace tumor
