#ifndef TUMOR_LEVELSET_HPP
#define TUMOR_LEVELSET_HPP

#include <array>
#include <functional>
#include <string>

#include "tumor/grid.hpp"

namespace tumor {

/// Level-set field tracking the tumor boundary: phi < 0 inside the tumor,
/// phi > 0 in the healthy tissue, the interface is {phi = 0}.
struct LevelSetField {
    ScalarField phi;

    LevelSetField() = default;
    explicit LevelSetField(ScalarField f) : phi(std::move(f)) {}
    const Grid& grid() const { return phi.grid; }
};

/// Closed-form boundary motion, evaluable at arbitrary (t, x).
/// vel must vanish for |x| > support_radius, with support_radius <= R.
struct PrescribedMotion {
    std::function<std::array<double, 3>(double t, const std::array<double, 3>& x)> vel;
    double support_radius = 0.0;

    std::array<double, 3> operator()(double t, const std::array<double, 3>& x) const {
        return vel(t, x);
    }
};

/// Motion presets accepted by the config: "static", "rotation(rate)",
/// "expansion(rate, r_support)". Rotation acts rigidly in the xy-plane out
/// to 0.75*r_support and tapers smoothly to zero at r_support; expansion is
/// V = rate*x with the same taper.
PrescribedMotion make_motion_static();
PrescribedMotion make_motion_rotation(double rate, double r_support);
PrescribedMotion make_motion_expansion(double rate, double r_support);

/// Radius below which the rotation/expansion presets are exactly rigid /
/// exactly linear (the taper starts here).
inline double motion_rigid_radius(const PrescribedMotion& m) { return 0.75 * m.support_radius; }

/// Semi-Lagrangian transport of phi under dphi/dt + V . grad phi = 0:
/// second-order midpoint backtrace of the characteristic, multilinear
/// interpolation at the foot point. Unconditionally stable.
LevelSetField advect_levelset(const LevelSetField& ls, const PrescribedMotion& V,
                              double t, double dt);

/// Regularization floor for |grad phi| in grid units.
inline constexpr double kGradFloor = 1e-8;

/// Outward unit normal n = grad phi / max(|grad phi|, floor).
/// Flat regions (|grad phi| under the floor) return near-zero vectors.
VectorField interface_normal(const LevelSetField& ls);

/// Volumetric surface measure delta_w(phi) |grad phi| with the cosine kernel
/// delta_w(s) = (1/2w)(1 + cos(pi s / w)) on |s| <= w. Requires w >= 1.5h.
ScalarField surface_delta(const LevelSetField& ls, double w);

/// Smoothed characteristic function of the tumor {phi < 0}: H_w(-phi),
/// in [0,1], equal to 1 where phi <= -w and 0 where phi >= w.
ScalarField inside_indicator(const LevelSetField& ls, double w);

/// Smoothed Heaviside (the integral of the cosine kernel) and the kernel
/// itself, exposed for tests.
double smoothed_heaviside(double s, double w);
double cosine_delta(double s, double w);

/// Characteristic ODE dX/dt = V(t, X) integrated with classical RK4 in
/// `steps` equal substeps. Oracle for advect_levelset.
std::array<double, 3> flow_map(const PrescribedMotion& V, const std::array<double, 3>& x0,
                               double t0, double t1, int steps);

/// Multilinear interpolation of cell-centered data at an arbitrary point
/// (clamped to the hull of cell centers).
double interpolate(const ScalarField& f, const std::array<double, 3>& x);

} // namespace tumor

#endif
