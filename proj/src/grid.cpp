#include "tumor/grid.hpp"

#include <string>

namespace tumor {

Grid make_grid(double R, int N, int d) {
    if (d != 2 && d != 3)
        throw ConfigError("invalid-dimension: d must be 2 or 3, got " + std::to_string(d));
    if (N < 8)
        throw ConfigError("invalid-resolution: N must be >= 8, got " + std::to_string(N));
    if (!(R > 0.0))
        throw ConfigError("invalid-resolution: R must be positive");

    Grid g;
    g.dim = d;
    g.n = N;
    g.half_width = 2.0 * R;
    g.h = 4.0 * R / static_cast<double>(N);
    g.cells = 1;
    for (int a = 0; a < d; ++a) g.cells *= static_cast<std::size_t>(N);
    return g;
}

} // namespace tumor
