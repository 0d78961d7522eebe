#include <doctest.h>

#include <random>

#include "tumor/kinetics.hpp"
#include "tumor/stencil.hpp"

using namespace tumor;

namespace {
RateConstants defaults() { return RateConstants{}; }
}

TEST_CASE("source terms at saturated nutrient") {
    const Grid g = make_grid(1.0, 8, 2);
    const RateConstants k = defaults();
    ScalarField P(g, 2.0), Q(g, 3.0), D(g, 1.0), C(g, k.C_bar);
    const SourceTerms src = source_terms(P, Q, D, C, k);
    for (std::size_t c = 0; c < g.cells; ++c) {
        CHECK(src.G_P[c] == doctest::Approx(k.K_B * k.C_bar * 2.0));
        CHECK(src.G_Q[c] == doctest::Approx(-k.K_P * k.C_bar * 3.0));
        CHECK(src.G_D[c] == doctest::Approx(-k.K_R * 1.0));
    }
}

TEST_CASE("source terms at zero nutrient") {
    const Grid g = make_grid(1.0, 8, 2);
    const RateConstants k = defaults();
    ScalarField P(g, 2.0), Q(g, 3.0), D(g, 0.0), C(g, 0.0);
    const SourceTerms src = source_terms(P, Q, D, C, k);
    for (std::size_t c = 0; c < g.cells; ++c) {
        CHECK(src.G_P[c] == doctest::Approx(-(k.K_Q + k.K_A) * k.C_bar * 2.0));
        CHECK(src.G_Q[c] == doctest::Approx(-k.K_D * k.C_bar * 3.0));
        CHECK(src.G_D[c] == 0.0);
    }
}

TEST_CASE("dead-cell clearance is direct substitution") {
    const Grid g = make_grid(1.0, 8, 2);
    RateConstants k = defaults();
    k.K_R = 0.5;
    ScalarField P(g, 0.0), Q(g, 0.0), D(g, 2.0), C(g, 0.5);
    const SourceTerms src = source_terms(P, Q, D, C, k);
    for (std::size_t c = 0; c < g.cells; ++c)
        CHECK(src.G_D[c] == doctest::Approx(-1.0));
}

TEST_CASE("source preconditions are enforced") {
    const Grid g = make_grid(1.0, 8, 2);
    const RateConstants k = defaults();
    ScalarField P(g, 1.0), Q(g, 1.0), D(g, 1.0), C(g, 0.5);
    ScalarField neg = P;
    neg[3] = -1e-6;
    CHECK_THROWS_AS(source_terms(neg, Q, D, C, k), NumericalError);
    ScalarField hot = C;
    hot[3] = 1.5 * k.C_bar;
    CHECK_THROWS_AS(source_terms(P, Q, D, hot, k), NumericalError);
}

TEST_CASE("total density is the cellwise sum and commutes with integration") {
    const Grid g = make_grid(1.0, 8, 2);
    ScalarField P(g, 1.0), Q(g, 2.0), D(g, 3.0);
    const ScalarField rho = total_density(P, Q, D);
    for (std::size_t c = 0; c < g.cells; ++c) CHECK(rho[c] == 6.0);

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (std::size_t c = 0; c < g.cells; ++c) {
        P[c] = uni(rng);
        Q[c] = uni(rng);
        D[c] = uni(rng);
    }
    const double lhs = tumor::integrate(total_density(P, Q, D));
    const double rhs = tumor::integrate(P) + tumor::integrate(Q) + tumor::integrate(D);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("expanded total source equals the sum of the per-species sources") {
    const Grid g = make_grid(1.0, 8, 2);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const RateConstants k = defaults();
    for (int rep = 0; rep < 50; ++rep) {
        ScalarField P(g), Q(g), D(g), C(g);
        for (std::size_t c = 0; c < g.cells; ++c) {
            P[c] = 3.0 * uni(rng);
            Q[c] = 2.0 * uni(rng);
            D[c] = uni(rng);
            C[c] = k.C_bar * uni(rng);
        }
        const SourceTerms src = source_terms(P, Q, D, C, k);
        const ScalarField tot = total_source_expanded(P, Q, D, C, k);
        for (std::size_t c = 0; c < g.cells; ++c) {
            const double sum = src.G_P[c] + src.G_Q[c] + src.G_D[c];
            // Scale by the magnitudes of the individual contributions: the
            // two expressions differ only by reassociation, whose error is
            // bounded relative to the terms, not the (cancelling) sum.
            const double scale = (k.K_B * C[c] + (k.K_Q + k.K_A) * (k.C_bar - C[c])) * P[c] +
                                 (k.K_P * C[c] + k.K_D * (k.C_bar - C[c])) * Q[c] +
                                 k.K_R * D[c] + 1e-30;
            CHECK(std::fabs(tot[c] - sum) / scale < 1e-13);
        }
    }
}

TEST_CASE("expanded total source special cases") {
    const Grid g = make_grid(1.0, 8, 2);
    RateConstants k = defaults();
    k.K_D = k.K_P; // makes the Q coefficient collapse to -K_P C_bar
    ScalarField P(g, 1.5), Q(g, 0.5), D(g, 2.0), C(g, k.C_bar);
    const ScalarField tot = total_source_expanded(P, Q, D, C, k);
    for (std::size_t c = 0; c < g.cells; ++c) {
        const double expect =
            k.K_B * k.C_bar * 1.5 - k.K_P * k.C_bar * 0.5 - k.K_R * 2.0;
        CHECK(tot[c] == doctest::Approx(expect).epsilon(1e-13));
    }

    RateConstants zero;
    zero.K_B = zero.K_Q = zero.K_P = zero.K_A = zero.K_D = zero.K_R = 0.0;
    const ScalarField none = total_source_expanded(P, Q, D, C, zero);
    for (std::size_t c = 0; c < g.cells; ++c) CHECK(none[c] == 0.0);
}

TEST_CASE("sign structure and homogeneity of the sources") {
    const Grid g = make_grid(1.0, 8, 2);
    const RateConstants k = defaults();
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    ScalarField P(g), Q(g), D(g), C(g);
    for (std::size_t c = 0; c < g.cells; ++c) {
        P[c] = uni(rng);
        Q[c] = uni(rng);
        D[c] = uni(rng);
        C[c] = k.C_bar * uni(rng);
    }
    const SourceTerms src = source_terms(P, Q, D, C, k);
    for (std::size_t c = 0; c < g.cells; ++c) {
        CHECK(src.G_Q[c] <= 0.0);
        CHECK(src.G_D[c] <= 0.0);
        if (k.K_B * C[c] <= (k.K_Q + k.K_A) * (k.C_bar - C[c])) CHECK(src.G_P[c] <= 0.0);
    }

    const double scale = 2.5;
    ScalarField P2(g), Q2(g), D2(g);
    for (std::size_t c = 0; c < g.cells; ++c) {
        P2[c] = scale * P[c];
        Q2[c] = scale * Q[c];
        D2[c] = scale * D[c];
    }
    const SourceTerms src2 = source_terms(P2, Q2, D2, C, k);
    for (std::size_t c = 0; c < g.cells; ++c) {
        CHECK(src2.G_P[c] == doctest::Approx(scale * src.G_P[c]).epsilon(1e-13));
        CHECK(src2.G_Q[c] == doctest::Approx(scale * src.G_Q[c]).epsilon(1e-13));
        CHECK(src2.G_D[c] == doctest::Approx(scale * src.G_D[c]).epsilon(1e-13));
    }
}

TEST_CASE("rate constants validation") {
    RateConstants k;
    k.K_B = -0.1;
    CHECK_THROWS_AS(k.validate(), ConfigError);
    k = RateConstants{};
    k.C_bar = 0.0;
    CHECK_THROWS_AS(k.validate(), ConfigError);
    CHECK_NOTHROW(RateConstants{}.validate());
}
