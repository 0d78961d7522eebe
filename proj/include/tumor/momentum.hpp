#ifndef TUMOR_MOMENTUM_HPP
#define TUMOR_MOMENTUM_HPP

#include "tumor/grid.hpp"
#include "tumor/levelset.hpp"
#include "tumor/penalty.hpp"
#include "tumor/state.hpp"

namespace tumor {

struct PhysicalParams {
    double mu = 0.05;     // shear viscosity base value
    double nu = 0.05;     // nutrient diffusivity base value
    double K_perm = 1.0;  // permeability in the Darcy drag mu/K

    void validate() const;
};

struct MomentumStep {
    VectorField mom;
    VectorField vel;
};

/// Upwind-biased divergence of the momentum flux rho v (x) v, componentwise.
VectorField convective_flux_div(const ScalarField& rho, const VectorField& v);

/// v = m / max(rho, rho_floor); vacuum cells (rho < rho_floor, |m| small)
/// carry zero velocity. Throws NumericalError (momentum-in-vacuum) when a
/// cell with rho < rho_floor^2 holds |m| >= rho_floor.
VectorField recover_velocity(const VectorField& m, const ScalarField& rho, double rho_floor);

/// One first-order step of the penalized momentum balance
///   d(rho v)/dt + div(rho v (x) v) + grad sigma_delta
///     = div(mu_w grad v) - (mu_w/K) v + boundary penalty,
/// reading the species densities of `s` (already advanced to the new level)
/// and the start-of-step velocity s.vel / momentum s.mom. Convection and the
/// pressure gradient are explicit; the viscous term is point-implicit
/// (a convex per-cell average, unconditionally stable); drag and the
/// boundary penalty are per-cell implicit and linear in v. Near-vacuum cells
/// use the effective inertia max(rho, rho_vac) in the velocity update so the
/// quasi-static force balance (viscosity/drag/penalty) stays well posed where
/// the species vanish; the returned momentum is rho * v with the true rho.
MomentumStep step_momentum(const State& s, const PhysicalParams& phys,
                           const PenaltyParams& params, const PrescribedMotion& V,
                           double t, double dt);

} // namespace tumor

#endif
