#ifndef TUMOR_STATE_HPP
#define TUMOR_STATE_HPP

#include "tumor/grid.hpp"
#include "tumor/levelset.hpp"

namespace tumor {

/// All evolving fields at one time level.
struct State {
    double t = 0.0;
    ScalarField P, Q, D, C;
    VectorField vel; // v
    VectorField mom; // rho v
    LevelSetField phi;

    explicit State(const Grid& g)
        : P(g), Q(g), D(g), C(g), vel(g), mom(g), phi(ScalarField(g, 1.0)) {}
    State() = default;
};

} // namespace tumor

#endif
