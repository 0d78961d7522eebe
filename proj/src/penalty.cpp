#include "tumor/penalty.hpp"

#include <cmath>
#include <cstdint>

#include "tumor/errors.hpp"

namespace tumor {

void PenaltyParams::validate() const {
    if (!(epsilon > 0)) throw ConfigError("epsilon must be positive");
    if (!(omega > 0 && omega <= 1)) throw ConfigError("omega must lie in (0, 1]");
    if (delta < 0) throw ConfigError("delta must be nonnegative");
    if (!(beta >= 2)) throw ConfigError("beta >= 2 required");
    if (!(m > 1.5)) throw ConfigError("m > 3/2 required");
    if (!(w > 0)) throw ConfigError("smoothing width must be positive");
    if (!(rho_floor > 0)) throw ConfigError("rho_floor must be positive");
    if (!(rho_vac > 0)) throw ConfigError("rho_vac must be positive");
}

ScalarField coefficient_profile(const LevelSetField& phi, double base, double omega, double w) {
    ScalarField ind = inside_indicator(phi, w);
    const Grid& g = phi.grid();
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        const auto i = static_cast<std::size_t>(c);
        ind[i] = base * (omega + (1.0 - omega) * ind[i]);
    }
    return ind;
}

ScalarField pressure_sigma_delta(const ScalarField& P, const ScalarField& Q,
                                 const ScalarField& D, double m, double delta, double beta) {
    const Grid& g = P.grid;
    ScalarField out(g);
    bool bad = false;
#pragma omp parallel for schedule(static) reduction(|| : bad)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        const auto i = static_cast<std::size_t>(c);
        if (P[i] < 0.0 || Q[i] < 0.0 || D[i] < 0.0) {
            bad = true;
            continue;
        }
        double s = std::pow(P[i], m) + std::pow(Q[i], m) + std::pow(D[i], m);
        if (delta > 0.0)
            s += delta * (std::pow(P[i], beta) + std::pow(Q[i], beta) + std::pow(D[i], beta));
        out[i] = s;
    }
    if (bad) throw NumericalError("negative-density in pressure_sigma_delta");
    return out;
}

VectorField penalty_force(const VectorField& v, const PrescribedMotion& V, double t,
                          const LevelSetField& phi, const PenaltyParams& params) {
    const Grid& g = phi.grid();
    const ScalarField sdel = surface_delta(phi, params.w);
    const VectorField nrm = interface_normal(phi);
    VectorField out(g, 0.0);
    const double inv_eps = 1.0 / params.epsilon;
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        const auto i = static_cast<std::size_t>(c);
        if (sdel[i] == 0.0) continue;
        const std::array<double, 3> x = g.cell_center(i);
        const std::array<double, 3> Vx = V(t, x);
        double slip = 0.0;
        for (int a = 0; a < g.dim; ++a) slip += (v.at(a, i) - Vx[a]) * nrm.at(a, i);
        const double mag = -inv_eps * sdel[i] * slip;
        for (int a = 0; a < g.dim; ++a) out.at(a, i) = mag * nrm.at(a, i);
    }
    return out;
}

} // namespace tumor
