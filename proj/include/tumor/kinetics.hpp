#ifndef TUMOR_KINETICS_HPP
#define TUMOR_KINETICS_HPP

#include "tumor/grid.hpp"

namespace tumor {

/// Phase-change rate constants. K_C is fixed to 1 (the nutrient decay rate
/// is absorbed into the time scale), so it does not appear here.
struct RateConstants {
    double K_B = 1.0;  // proliferation
    double K_Q = 0.3;  // P -> Q under starvation
    double K_P = 0.4;  // Q removal with nutrient
    double K_A = 0.2;  // apoptosis
    double K_D = 0.3;  // Q death under starvation
    double K_R = 0.25; // dead-cell clearance
    double C_bar = 1.0;

    void validate() const;
};

struct SourceTerms {
    ScalarField G_P, G_Q, G_D;
};

/// Per-cell growth-rate coefficients: G_Z = F_Z(C) * Z.
inline double rate_coeff_P(double C, const RateConstants& k) {
    return k.K_B * C - (k.K_Q + k.K_A) * (k.C_bar - C);
}
inline double rate_coeff_Q(double C, const RateConstants& k) {
    return -(k.K_P * C + k.K_D * (k.C_bar - C));
}
inline double rate_coeff_D(double /*C*/, const RateConstants& k) { return -k.K_R; }

/// Cellwise sources:
///   G_P = (K_B C - K_Q(Cbar-C) - K_A(Cbar-C)) P
///   G_Q = -(K_P C + K_D(Cbar-C)) Q
///   G_D = -K_R D
/// Throws NumericalError on negative densities or C outside [0, Cbar].
SourceTerms source_terms(const ScalarField& P, const ScalarField& Q, const ScalarField& D,
                         const ScalarField& C, const RateConstants& k);

/// rho = P + Q + D cellwise.
ScalarField total_density(const ScalarField& P, const ScalarField& Q, const ScalarField& D);

/// The expanded total source of the combined transport relation:
/// (K_A+K_B+K_Q) C P - (K_A+K_Q) Cbar P - K_D Cbar Q + (K_D-K_P) C Q - K_R D.
/// Algebraically identical to G_P + G_Q + G_D.
ScalarField total_source_expanded(const ScalarField& P, const ScalarField& Q,
                                  const ScalarField& D, const ScalarField& C,
                                  const RateConstants& k);

} // namespace tumor

#endif
