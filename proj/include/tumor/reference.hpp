#ifndef TUMOR_REFERENCE_HPP
#define TUMOR_REFERENCE_HPP

#include "tumor/grid.hpp"

// Serial reference kernels. These are written as plain loop nests,
// independent of the OpenMP implementations in stencil.cpp/transport.cpp,
// and exist for parity tests and the benchmark tool.

namespace tumor::serial {

VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& u);
ScalarField variable_coeff_laplacian(const ScalarField& f, const ScalarField& a);
ScalarField upwind_advect(const ScalarField& z, const VectorField& v, double dt);

} // namespace tumor::serial

#endif
