#ifndef TUMOR_NUTRIENT_HPP
#define TUMOR_NUTRIENT_HPP

#include "tumor/grid.hpp"
#include "tumor/levelset.hpp"
#include "tumor/penalty.hpp"

namespace tumor {

/// One step of dC/dt = div(nu_w grad C) - C with nu_w =
/// coefficient_profile(phi, nu, omega, w), C = 0 on the box boundary.
/// Diffusion is advanced by explicit sub-cycling with each substep under the
/// monotone stability bound; the decay factor exp(-dt_sub) is exact.
/// Output stays in [0, max C] for nonnegative input (discrete maximum
/// principle of the monotone scheme).
ScalarField step_nutrient(const ScalarField& C, const LevelSetField& phi, double nu,
                          const PenaltyParams& params, double dt);

/// Number of substeps step_nutrient will take for a given dt (exposed for
/// tests and the time-step report).
int nutrient_substeps(const Grid& g, double max_coeff, double dt);

/// Residual of the discrete nutrient energy budget
///   d/dt int C^2/2 + int (C^2 + nu_w |grad C|^2) = 0
/// over one step, with the gradient energy in the face-based form that
/// matches the flux Laplacian exactly. Expected O(dt) + interpolation terms.
double nutrient_budget_residual(const ScalarField& C_old, const ScalarField& C_new,
                                const LevelSetField& phi, double nu,
                                const PenaltyParams& params, double dt);

/// true iff -tol <= min C and max C <= max(C0_max, C_bar) + tol with
/// tol = 1e-12 relative to the bound.
bool check_max_principle(const ScalarField& C, double C0_max, double C_bar);

} // namespace tumor

#endif
