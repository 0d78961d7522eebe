#include "tumor/levelset.hpp"

#include <cmath>
#include <cstdint>

#include "tumor/stencil.hpp"

namespace tumor {

namespace {

// cos^2 taper: 1 for r <= r0, 0 for r >= r1.
double taper(double r, double r0, double r1) {
    if (r <= r0) return 1.0;
    if (r >= r1) return 0.0;
    double s = std::cos(0.5 * M_PI * (r - r0) / (r1 - r0));
    return s * s;
}

} // namespace

PrescribedMotion make_motion_static() {
    PrescribedMotion m;
    m.support_radius = 0.0;
    m.vel = [](double, const std::array<double, 3>&) {
        return std::array<double, 3>{0.0, 0.0, 0.0};
    };
    return m;
}

PrescribedMotion make_motion_rotation(double rate, double r_support) {
    PrescribedMotion m;
    m.support_radius = r_support;
    const double r0 = 0.75 * r_support;
    m.vel = [rate, r0, r_support](double, const std::array<double, 3>& x) {
        const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        const double q = taper(r, r0, r_support) * rate;
        return std::array<double, 3>{-q * x[1], q * x[0], 0.0};
    };
    return m;
}

PrescribedMotion make_motion_expansion(double rate, double r_support) {
    PrescribedMotion m;
    m.support_radius = r_support;
    const double r0 = 0.75 * r_support;
    m.vel = [rate, r0, r_support](double, const std::array<double, 3>& x) {
        const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        const double q = taper(r, r0, r_support) * rate;
        return std::array<double, 3>{q * x[0], q * x[1], q * x[2]};
    };
    return m;
}

double interpolate(const ScalarField& f, const std::array<double, 3>& x) {
    const Grid& g = f.grid;
    int base[3] = {0, 0, 0};
    double frac[3] = {0.0, 0.0, 0.0};
    for (int a = 0; a < g.dim; ++a) {
        double s = (x[a] + g.half_width) / g.h - 0.5; // cell-center coordinate
        if (s < 0.0) s = 0.0;
        if (s > g.n - 1.0) s = g.n - 1.0;
        int b = static_cast<int>(std::floor(s));
        if (b > g.n - 2) b = g.n - 2;
        base[a] = b;
        frac[a] = s - b;
    }
    const int corners = 1 << g.dim;
    double val = 0.0;
    for (int k = 0; k < corners; ++k) {
        double wgt = 1.0;
        std::size_t c = 0;
        for (int a = g.dim - 1; a >= 0; --a) {
            const int off = (k >> a) & 1;
            wgt *= off ? frac[a] : 1.0 - frac[a];
            c = c * static_cast<std::size_t>(g.n) + static_cast<std::size_t>(base[a] + off);
        }
        val += wgt * f[c];
    }
    return val;
}

LevelSetField advect_levelset(const LevelSetField& ls, const PrescribedMotion& V,
                              double t, double dt) {
    const Grid& g = ls.grid();
    ScalarField out(g);
    const double th = t + 0.5 * dt;
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        const std::array<double, 3> x = g.cell_center(static_cast<std::size_t>(c));
        const std::array<double, 3> v1 = V(t + dt, x);
        std::array<double, 3> xm{x[0] - 0.5 * dt * v1[0], x[1] - 0.5 * dt * v1[1],
                                 x[2] - 0.5 * dt * v1[2]};
        const std::array<double, 3> v2 = V(th, xm);
        std::array<double, 3> foot{x[0] - dt * v2[0], x[1] - dt * v2[1], x[2] - dt * v2[2]};
        out[static_cast<std::size_t>(c)] = interpolate(ls.phi, foot);
    }
    return LevelSetField(std::move(out));
}

VectorField interface_normal(const LevelSetField& ls) {
    VectorField grad = gradient(ls.phi);
    const Grid& g = ls.grid();
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        double mag2 = 0.0;
        for (int a = 0; a < g.dim; ++a) {
            const double v = grad.at(a, static_cast<std::size_t>(c));
            mag2 += v * v;
        }
        const double mag = std::sqrt(mag2);
        const double denom = mag > kGradFloor ? mag : kGradFloor;
        for (int a = 0; a < g.dim; ++a) grad.at(a, static_cast<std::size_t>(c)) /= denom;
    }
    return grad;
}

double cosine_delta(double s, double w) {
    if (std::fabs(s) >= w) return 0.0;
    return (1.0 + std::cos(M_PI * s / w)) / (2.0 * w);
}

double smoothed_heaviside(double s, double w) {
    if (s <= -w) return 0.0;
    if (s >= w) return 1.0;
    return 0.5 * (1.0 + s / w + std::sin(M_PI * s / w) / M_PI);
}

ScalarField surface_delta(const LevelSetField& ls, double w) {
    const Grid& g = ls.grid();
    if (w < 1.5 * g.h) throw NumericalError("width-too-small: surface_delta needs w >= 1.5h");
    VectorField grad = gradient(ls.phi);
    ScalarField out(g);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c) {
        double mag2 = 0.0;
        for (int a = 0; a < g.dim; ++a) {
            const double v = grad.at(a, static_cast<std::size_t>(c));
            mag2 += v * v;
        }
        out[static_cast<std::size_t>(c)] =
            cosine_delta(ls.phi[static_cast<std::size_t>(c)], w) * std::sqrt(mag2);
    }
    return out;
}

ScalarField inside_indicator(const LevelSetField& ls, double w) {
    const Grid& g = ls.grid();
    if (w < 1.5 * g.h) throw NumericalError("width-too-small: inside_indicator needs w >= 1.5h");
    ScalarField out(g);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(g.cells); ++c)
        out[static_cast<std::size_t>(c)] =
            smoothed_heaviside(-ls.phi[static_cast<std::size_t>(c)], w);
    return out;
}

std::array<double, 3> flow_map(const PrescribedMotion& V, const std::array<double, 3>& x0,
                               double t0, double t1, int steps) {
    if (steps < 1) throw NumericalError("flow_map: steps must be >= 1");
    if (t1 < t0) throw NumericalError("flow_map: t1 must be >= t0");
    std::array<double, 3> x = x0;
    const double dt = (t1 - t0) / steps;
    for (int s = 0; s < steps; ++s) {
        const double t = t0 + s * dt;
        const auto k1 = V(t, x);
        std::array<double, 3> x2{x[0] + 0.5 * dt * k1[0], x[1] + 0.5 * dt * k1[1],
                                 x[2] + 0.5 * dt * k1[2]};
        const auto k2 = V(t + 0.5 * dt, x2);
        std::array<double, 3> x3{x[0] + 0.5 * dt * k2[0], x[1] + 0.5 * dt * k2[1],
                                 x[2] + 0.5 * dt * k2[2]};
        const auto k3 = V(t + 0.5 * dt, x3);
        std::array<double, 3> x4{x[0] + dt * k3[0], x[1] + dt * k3[1], x[2] + dt * k3[2]};
        const auto k4 = V(t + dt, x4);
        for (int a = 0; a < 3; ++a)
            x[a] += dt / 6.0 * (k1[a] + 2.0 * k2[a] + 2.0 * k3[a] + k4[a]);
    }
    return x;
}

} // namespace tumor
