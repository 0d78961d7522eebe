// Kernel benchmark: OpenMP implementations vs the serial reference, with a
// bit-parity check on each kernel's output.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "tumor/grid.hpp"
#include "tumor/reference.hpp"
#include "tumor/stencil.hpp"
#include "tumor/transport.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_best_ms(F&& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        f();
        const auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

bool identical(const tumor::ScalarField& a, const tumor::ScalarField& b) {
    for (std::size_t c = 0; c < a.grid.cells; ++c)
        if (a[c] != b[c]) return false;
    return true;
}

bool identical(const tumor::VectorField& a, const tumor::VectorField& b) {
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (a.values[i] != b.values[i]) return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    const int N = argc > 1 ? std::atoi(argv[1]) : 256;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 5;
    const tumor::Grid g = tumor::make_grid(1.0, N, 2);

    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    tumor::ScalarField f(g), a(g);
    tumor::VectorField v(g);
    for (std::size_t c = 0; c < g.cells; ++c) {
        f[c] = uni(rng);
        a[c] = 0.1 + uni(rng);
        for (int ax = 0; ax < g.dim; ++ax) v.at(ax, c) = uni(rng) - 0.5;
    }
    const double dt = 0.2 * g.h; // safely under the advective CFL bound

    std::printf("grid %d x %d (%zu cells), best of %d reps\n", N, N, g.cells, reps);
    std::printf("%-28s %10s %10s %8s %s\n", "kernel", "omp [ms]", "serial", "speedup",
                "bit-identical");

    {
        tumor::VectorField out_p(g), out_s(g);
        const double tp = time_best_ms([&] { out_p = tumor::gradient(f); }, reps);
        const double ts = time_best_ms([&] { out_s = tumor::serial::gradient(f); }, reps);
        std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "gradient", tp, ts, ts / tp,
                    identical(out_p, out_s) ? "yes" : "NO");
    }
    {
        tumor::ScalarField out_p(g), out_s(g);
        const double tp = time_best_ms([&] { out_p = tumor::divergence(v); }, reps);
        const double ts = time_best_ms([&] { out_s = tumor::serial::divergence(v); }, reps);
        std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "divergence", tp, ts, ts / tp,
                    identical(out_p, out_s) ? "yes" : "NO");
    }
    {
        tumor::ScalarField out_p(g), out_s(g);
        const double tp =
            time_best_ms([&] { out_p = tumor::variable_coeff_laplacian(f, a); }, reps);
        const double ts =
            time_best_ms([&] { out_s = tumor::serial::variable_coeff_laplacian(f, a); }, reps);
        std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "variable_coeff_laplacian", tp, ts,
                    ts / tp, identical(out_p, out_s) ? "yes" : "NO");
    }
    {
        tumor::ScalarField out_p(g), out_s(g);
        const double tp = time_best_ms([&] { out_p = tumor::upwind_advect(f, v, dt); }, reps);
        const double ts =
            time_best_ms([&] { out_s = tumor::serial::upwind_advect(f, v, dt); }, reps);
        std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "upwind_advect", tp, ts, ts / tp,
                    identical(out_p, out_s) ? "yes" : "NO");
    }
    return 0;
}
