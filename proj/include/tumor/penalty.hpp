#ifndef TUMOR_PENALTY_HPP
#define TUMOR_PENALTY_HPP

#include "tumor/grid.hpp"
#include "tumor/levelset.hpp"

namespace tumor {

/// All regularization parameters of the penalized scheme.
struct PenaltyParams {
    double epsilon = 1e-2;  // boundary penalty strength
    double omega = 0.1;     // exterior coefficient fraction for mu_w, nu_w
    double delta = 1e-2;    // artificial pressure weight
    double beta = 2.0;      // artificial pressure exponent, >= 2
    double m = 2.0;         // pressure exponent, > 3/2
    double w = 0.0;         // interface smoothing width (length)
    double rho_floor = 1e-10; // vacuum bookkeeping threshold
    double rho_vac = 0.05;  // effective inertia in near-vacuum velocity updates

    void validate() const;
};

/// base * (omega + (1 - omega) * inside_indicator(phi, w)): equals base deep
/// inside the tumor, omega*base in the healthy tissue, smooth across the
/// band. Shared profile shape for mu_w and nu_w.
ScalarField coefficient_profile(const LevelSetField& phi, double base, double omega, double w);

/// sigma_delta = (P^m + Q^m + D^m) + delta (P^beta + Q^beta + D^beta).
ScalarField pressure_sigma_delta(const ScalarField& P, const ScalarField& Q,
                                 const ScalarField& D, double m, double delta, double beta);

/// Volumetric boundary penalty force
///   f = -(1/eps) * surface_delta(phi, w) * ((v - V) . n) n,
/// dissipative against the normal slip by construction.
VectorField penalty_force(const VectorField& v, const PrescribedMotion& V, double t,
                          const LevelSetField& phi, const PenaltyParams& params);

} // namespace tumor

#endif
