#ifndef TUMOR_STENCIL_HPP
#define TUMOR_STENCIL_HPP

#include "tumor/grid.hpp"

namespace tumor {

/// Midpoint-rule integral over the reference box: sum f * h^d.
/// Accumulated serially in cell order so results are bit-reproducible.
double integrate(const ScalarField& f);

double max_value(const ScalarField& f);
double min_value(const ScalarField& f);
bool all_finite(const ScalarField& f);
bool all_finite(const VectorField& u);

/// Centered second-order gradient on interior cells; first-order one-sided
/// at the outermost cell layer.
VectorField gradient(const ScalarField& f);

/// Centered divergence with the same stencil policy as gradient.
ScalarField divergence(const VectorField& u);

/// Conservative div(a grad f) in flux form with harmonic-mean face
/// coefficients and homogeneous Dirichlet data on the box boundary
/// (mirror ghost f_ghost = -f_in, so f = 0 on the wall face).
/// Throws NumericalError if any coefficient is negative.
ScalarField variable_coeff_laplacian(const ScalarField& f, const ScalarField& a);

/// Discrete Dirichlet energy sum_faces a_face ((f_j - f_i)/h)^2 h^d matching
/// variable_coeff_laplacian exactly: integrate(f * L_a f) = -dirichlet_energy(f, a)
/// to round-off (summation by parts with the same face coefficients).
double dirichlet_energy(const ScalarField& f, const ScalarField& a);

namespace detail {
inline double harmonic_mean(double a, double b) {
    double s = a + b;
    return s > 0.0 ? 2.0 * a * b / s : 0.0;
}
} // namespace detail

} // namespace tumor

#endif
