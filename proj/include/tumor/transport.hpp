#ifndef TUMOR_TRANSPORT_HPP
#define TUMOR_TRANSPORT_HPP

#include "tumor/grid.hpp"
#include "tumor/kinetics.hpp"

namespace tumor {

/// Conservative first-order upwind step of dZ/dt + div(Z v) = 0 with
/// zero-inflow exterior ghosts. Positivity-preserving under the advective
/// CFL bound; throws NumericalError (cfl-violation) if dt is too large.
ScalarField upwind_advect(const ScalarField& z, const VectorField& v, double dt);

struct SpeciesStep {
    ScalarField P, Q, D;
};

/// Split step for the three species: upwind transport followed by the exact
/// exponential source update Z <- Z * exp(F_Z(C) dt) with C frozen at the
/// start of the step. Both substeps preserve positivity exactly.
SpeciesStep step_species(const ScalarField& P, const ScalarField& Q, const ScalarField& D,
                         const ScalarField& C, const VectorField& v, double dt,
                         const RateConstants& k);

inline constexpr double kVelocityFloor = 1e-12;

/// dt = cfl * h / max(max_cells sum_axes |v_a|, velocity floor).
double cfl_timestep(const VectorField& v, double h, double cfl);

} // namespace tumor

#endif
