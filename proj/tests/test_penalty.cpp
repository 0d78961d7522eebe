#include <doctest.h>

#include <cmath>
#include <random>

#include "tumor/errors.hpp"
#include "tumor/penalty.hpp"
#include "tumor/stencil.hpp"

using namespace tumor;

TEST_CASE("coefficient profile endpoint values") {
    const Grid g = make_grid(1.0, 32, 2);
    const double w = 2.0 * g.h;

    const ScalarField flat =
        coefficient_profile(LevelSetField(ScalarField(g, 0.3)), 2.0, 1.0, w);
    for (std::size_t c = 0; c < g.cells; ++c) CHECK(flat[c] == doctest::Approx(2.0));

    const ScalarField inside =
        coefficient_profile(LevelSetField(ScalarField(g, -1.0)), 0.7, 0.1, w);
    for (std::size_t c = 0; c < g.cells; ++c) CHECK(inside[c] == doctest::Approx(0.7));

    const double mu = 0.05;
    const ScalarField outside =
        coefficient_profile(LevelSetField(ScalarField(g, 1.0)), mu, 0.01, w);
    for (std::size_t c = 0; c < g.cells; ++c)
        CHECK(outside[c] == doctest::Approx(0.01 * mu));
}

TEST_CASE("coefficient profile is monotone nonincreasing in phi and bounded") {
    const Grid g = make_grid(1.0, 32, 2);
    const double w = 2.0 * g.h;
    ScalarField phi(g);
    for (std::size_t c = 0; c < g.cells; ++c)
        phi[c] = -2.0 * w + 4.0 * w * static_cast<double>(c) / static_cast<double>(g.cells);
    const ScalarField prof = coefficient_profile(LevelSetField(phi), 1.0, 0.2, w);
    for (std::size_t c = 1; c < g.cells; ++c) CHECK(prof[c] <= prof[c - 1] + 1e-15);
    for (std::size_t c = 0; c < g.cells; ++c) {
        CHECK(prof[c] >= 0.2 - 1e-15);
        CHECK(prof[c] <= 1.0 + 1e-15);
    }
}

TEST_CASE("pressure with artificial stiffening") {
    const Grid g = make_grid(1.0, 8, 2);
    const ScalarField zero =
        pressure_sigma_delta(ScalarField(g), ScalarField(g), ScalarField(g), 2.0, 0.1, 2.0);
    for (std::size_t c = 0; c < g.cells; ++c) CHECK(zero[c] == 0.0);

    const ScalarField quad =
        pressure_sigma_delta(ScalarField(g, 2.0), ScalarField(g), ScalarField(g), 2.0, 0.0, 2.0);
    for (std::size_t c = 0; c < g.cells; ++c) CHECK(quad[c] == doctest::Approx(4.0));

    const ScalarField ones = pressure_sigma_delta(ScalarField(g, 1.0), ScalarField(g, 1.0),
                                                  ScalarField(g, 1.0), 2.0, 0.1, 2.0);
    for (std::size_t c = 0; c < g.cells; ++c) CHECK(ones[c] == doctest::Approx(3.3));

    ScalarField neg(g, 1.0);
    neg[5] = -0.5;
    CHECK_THROWS_AS(
        pressure_sigma_delta(neg, ScalarField(g), ScalarField(g), 2.0, 0.0, 2.0),
        NumericalError);
}

TEST_CASE("pressure is monotone in each species") {
    const Grid g = make_grid(1.0, 8, 2);
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> uni(0.0, 2.0);
    ScalarField P(g), Q(g), D(g);
    for (std::size_t c = 0; c < g.cells; ++c) {
        P[c] = uni(rng);
        Q[c] = uni(rng);
        D[c] = uni(rng);
    }
    const ScalarField base = pressure_sigma_delta(P, Q, D, 2.0, 0.1, 2.0);
    ScalarField P2 = P;
    for (std::size_t c = 0; c < g.cells; ++c) P2[c] += 0.3;
    const ScalarField more = pressure_sigma_delta(P2, Q, D, 2.0, 0.1, 2.0);
    for (std::size_t c = 0; c < g.cells; ++c) CHECK(more[c] > base[c]);
}

namespace {
LevelSetField slab(const Grid& g) {
    ScalarField phi(g);
    for (std::size_t c = 0; c < g.cells; ++c) phi[c] = g.cell_center(c)[0];
    return LevelSetField(phi);
}
} // namespace

TEST_CASE("penalty force vanishes for matched or tangential velocity") {
    const Grid g = make_grid(1.0, 32, 2);
    PenaltyParams pp;
    pp.w = 2.0 * g.h;
    const LevelSetField phi = slab(g);
    const PrescribedMotion V = make_motion_static();

    const VectorField none = penalty_force(VectorField(g), V, 0.0, phi, pp);
    for (double v : none.values) CHECK(v == 0.0);

    // Slip purely tangential to the slab (normal is +x): no force.
    VectorField tang(g);
    for (std::size_t c = 0; c < g.cells; ++c) tang.at(1, c) = 0.7;
    const VectorField ft = penalty_force(tang, V, 0.0, phi, pp);
    for (double v : ft.values) CHECK(std::fabs(v) < 1e-12);
}

TEST_CASE("penalty force magnitude matches the kernel on a slab") {
    const Grid g = make_grid(1.0, 32, 2);
    PenaltyParams pp;
    pp.w = 2.0 * g.h;
    pp.epsilon = 0.05;
    const LevelSetField phi = slab(g);
    VectorField v(g);
    for (std::size_t c = 0; c < g.cells; ++c) v.at(0, c) = 1.0; // unit normal slip

    const VectorField f = penalty_force(v, make_motion_static(), 0.0, phi, pp);
    for (std::size_t c = 0; c < g.cells; ++c) {
        const int i = g.coord(c, 0);
        if (i == 0 || i == g.n - 1) continue; // one-sided gradient at walls
        const double expect = -cosine_delta(phi.phi[c], pp.w) / pp.epsilon;
        CHECK(f.at(0, c) == doctest::Approx(expect).epsilon(1e-12));
        CHECK(f.at(1, c) == doctest::Approx(0.0));
    }
}

TEST_CASE("penalty force is dissipative and normal-aligned") {
    const Grid g = make_grid(1.0, 64, 2);
    PenaltyParams pp;
    pp.w = 2.0 * g.h;
    ScalarField sdf(g);
    for (std::size_t c = 0; c < g.cells; ++c) {
        const auto x = g.cell_center(c);
        sdf[c] = std::hypot(x[0], x[1]) - 0.5;
    }
    const LevelSetField phi(sdf);
    const PrescribedMotion V = make_motion_expansion(0.2, 0.9);
    const VectorField n = interface_normal(phi);

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    VectorField v(g);
    for (double& x : v.values) x = uni(rng);

    const VectorField f = penalty_force(v, V, 0.3, phi, pp);
    for (std::size_t c = 0; c < g.cells; ++c) {
        const auto Vx = V(0.3, g.cell_center(c));
        double power = 0.0, cross = 0.0;
        for (int a = 0; a < g.dim; ++a) power += f.at(a, c) * (v.at(a, c) - Vx[a]);
        cross = f.at(0, c) * n.at(1, c) - f.at(1, c) * n.at(0, c);
        CHECK(power <= 1e-12);
        CHECK(std::fabs(cross) < 1e-10 * (1.0 + std::fabs(f.at(0, c)) + std::fabs(f.at(1, c))));
    }
}

TEST_CASE("penalty parameter validation") {
    PenaltyParams pp;
    pp.w = 0.1;
    CHECK_NOTHROW(pp.validate());
    pp.epsilon = 0.0;
    CHECK_THROWS_AS(pp.validate(), ConfigError);
    pp = PenaltyParams{};
    pp.w = 0.1;
    pp.omega = 0.0;
    CHECK_THROWS_AS(pp.validate(), ConfigError);
    pp = PenaltyParams{};
    pp.w = 0.1;
    pp.m = 1.4;
    CHECK_THROWS_AS(pp.validate(), ConfigError);
    pp = PenaltyParams{};
    pp.w = 0.1;
    pp.delta = -0.1;
    CHECK_THROWS_AS(pp.validate(), ConfigError);
}
