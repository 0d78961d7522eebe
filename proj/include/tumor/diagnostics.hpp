#ifndef TUMOR_DIAGNOSTICS_HPP
#define TUMOR_DIAGNOSTICS_HPP

#include "tumor/grid.hpp"
#include "tumor/kinetics.hpp"
#include "tumor/levelset.hpp"
#include "tumor/penalty.hpp"
#include "tumor/state.hpp"

namespace tumor {

/// Per-step scalar functionals. Column order here is the CSV schema.
struct DiagnosticsRecord {
    double t = 0.0;
    double mass_P = 0.0, mass_Q = 0.0, mass_D = 0.0, mass_C = 0.0;
    double energy_total = 0.0;
    double c_max = 0.0;
    double leakage_P = 0.0, leakage_Q = 0.0, leakage_D = 0.0, leakage_C = 0.0;
    double slip_norm_sq = 0.0;
    double nutrient_budget = 0.0;
    double mass_budget_P = 0.0, mass_budget_Q = 0.0, mass_budget_D = 0.0;
};

/// int [ (P^m+Q^m+D^m)/(m-1) + delta (P^b+Q^b+D^b)/(b-1) + rho |v|^2 / 2 ].
double total_energy(const State& s, const PenaltyParams& params);

/// Healthy-tissue mass of Z weighted by the clamped level-set ramp
/// clamp(phi/w, 0, 1): zero when supp Z lies in {phi <= 0}, the full mass
/// when phi >= w everywhere on supp Z.
double leakage(const ScalarField& Z, const LevelSetField& phi, double w);

/// int ((v - V).n)^2 surface_delta(phi, w) dx: the smeared surface integral
/// of the squared normal slip on the interface.
double slip_norm_sq(const VectorField& v, const PrescribedMotion& V, double t,
                    const LevelSetField& phi, double w);

/// | int Z_new - int Z_old - int Z_adv (exp(F dt) - 1) | with Z_adv the
/// post-transport field: the discrete mass budget of the split step, exact
/// up to boundary fluxes at the box wall.
double mass_budget_residual(const ScalarField& Z_old, const ScalarField& Z_new,
                            const ScalarField& effective_source_mass, double dt);

/// Assemble every functional for one state. Budget entries are supplied by
/// the caller (they need the previous state).
DiagnosticsRecord record(const State& s, const PrescribedMotion& V, const PenaltyParams& params,
                         double nutrient_budget, double mb_P, double mb_Q, double mb_D);

} // namespace tumor

#endif
