#include <doctest.h>

#include <limits>

#include "tumor/grid.hpp"
#include "tumor/stencil.hpp"

using namespace tumor;

TEST_CASE("make_grid basic geometry") {
    const Grid g = make_grid(1.0, 8, 2);
    CHECK(g.h == doctest::Approx(0.5));
    CHECK(g.cells == 64);
    CHECK(g.half_width == doctest::Approx(2.0));
    CHECK(g.h * g.n == doctest::Approx(4.0));
    CHECK(g.center(0) == doctest::Approx(-2.0 + 0.25));
    CHECK(g.center(7) == doctest::Approx(2.0 - 0.25));
}

TEST_CASE("make_grid 3-d") {
    const Grid g = make_grid(0.5, 16, 3);
    CHECK(g.h == doctest::Approx(0.125));
    CHECK(g.cells == 4096);
    CHECK(g.stride(0) == 1);
    CHECK(g.stride(1) == 16);
    CHECK(g.stride(2) == 256);
}

TEST_CASE("make_grid rejects bad parameters") {
    CHECK_THROWS_AS(make_grid(1.0, 7, 2), ConfigError);
    CHECK_THROWS_AS(make_grid(1.0, 8, 4), ConfigError);
    CHECK_THROWS_AS(make_grid(1.0, 8, 1), ConfigError);
    CHECK_THROWS_AS(make_grid(0.0, 8, 2), ConfigError);
    CHECK_THROWS_AS(make_grid(-1.0, 8, 2), ConfigError);
}

TEST_CASE("flat index round-trips through per-axis coordinates") {
    const Grid g = make_grid(1.0, 8, 3);
    for (std::size_t c = 0; c < g.cells; c += 7) {
        std::size_t back = 0;
        for (int a = g.dim - 1; a >= 0; --a)
            back = back * static_cast<std::size_t>(g.n) +
                   static_cast<std::size_t>(g.coord(c, a));
        CHECK(back == c);
    }
}

TEST_CASE("integrate is the midpoint rule") {
    const Grid g = make_grid(1.0, 8, 2);
    CHECK(integrate(ScalarField(g, 1.0)) == doctest::Approx(16.0)); // (4R)^2
    CHECK(integrate(ScalarField(g, 0.0)) == 0.0);

    ScalarField single(g);
    single[10] = 1.0;
    CHECK(integrate(single) == doctest::Approx(0.25)); // h^d
}

TEST_CASE("field extrema and finiteness checks") {
    const Grid g = make_grid(1.0, 8, 2);
    ScalarField f(g, 2.0);
    f[3] = -1.0;
    f[5] = 7.0;
    CHECK(max_value(f) == 7.0);
    CHECK(min_value(f) == -1.0);
    CHECK(all_finite(f));
    f[4] = std::numeric_limits<double>::quiet_NaN();
    CHECK_FALSE(all_finite(f));
}
