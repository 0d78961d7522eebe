#include "tumor/kinetics.hpp"

#include <cstdint>

#include "tumor/errors.hpp"

namespace tumor {

void RateConstants::validate() const {
    if (K_B < 0 || K_Q < 0 || K_P < 0 || K_A < 0 || K_D < 0 || K_R < 0)
        throw ConfigError("rate constants must be nonnegative");
    if (!(C_bar > 0)) throw ConfigError("C_bar must be positive");
}

namespace {
void check_inputs(const ScalarField& P, const ScalarField& Q, const ScalarField& D,
                  const ScalarField& C, const RateConstants& k) {
    const double ctol = 1e-12 * k.C_bar;
    for (std::size_t c = 0; c < P.size(); ++c) {
        if (P[c] < 0.0 || Q[c] < 0.0 || D[c] < 0.0)
            throw NumericalError("negative-density in source_terms");
        if (C[c] < -ctol || C[c] > k.C_bar + ctol)
            throw NumericalError("nutrient-out-of-range in source_terms");
    }
}
} // namespace

SourceTerms source_terms(const ScalarField& P, const ScalarField& Q, const ScalarField& D,
                         const ScalarField& C, const RateConstants& k) {
    check_inputs(P, Q, D, C, k);
    const Grid& g = P.grid;
    SourceTerms s{ScalarField(g), ScalarField(g), ScalarField(g)};
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        const auto i = static_cast<std::size_t>(c);
        s.G_P[i] = rate_coeff_P(C[i], k) * P[i];
        s.G_Q[i] = rate_coeff_Q(C[i], k) * Q[i];
        s.G_D[i] = rate_coeff_D(C[i], k) * D[i];
    }
    return s;
}

ScalarField total_density(const ScalarField& P, const ScalarField& Q, const ScalarField& D) {
    const Grid& g = P.grid;
    ScalarField rho(g);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        const auto i = static_cast<std::size_t>(c);
        rho[i] = P[i] + Q[i] + D[i];
    }
    return rho;
}

ScalarField total_source_expanded(const ScalarField& P, const ScalarField& Q,
                                  const ScalarField& D, const ScalarField& C,
                                  const RateConstants& k) {
    check_inputs(P, Q, D, C, k);
    const Grid& g = P.grid;
    ScalarField out(g);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        const auto i = static_cast<std::size_t>(c);
        out[i] = (k.K_A + k.K_B + k.K_Q) * C[i] * P[i] - (k.K_A + k.K_Q) * k.C_bar * P[i] -
                 k.K_D * k.C_bar * Q[i] + (k.K_D - k.K_P) * C[i] * Q[i] - k.K_R * D[i];
    }
    return out;
}

} // namespace tumor
