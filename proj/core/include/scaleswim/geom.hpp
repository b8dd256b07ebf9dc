#pragma once

#include <cmath>
#include <stdexcept>

namespace scaleswim {

/// Wrap an angle to the canonical interval (-pi, pi].
inline double wrap_angle(double a) {
    a = std::remainder(a, 2.0 * M_PI);
    if (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

/// Planar rigid transform (element of the rigid-motion group of the plane).
///
/// The heading is kept in (-pi, pi] by every constructor and operation,
/// so poses can be compared componentwise.
struct Pose {
    double x{0.0};
    double y{0.0};
    double theta{0.0};

    constexpr Pose() = default;
    Pose(double x_, double y_, double theta_) : x(x_), y(y_), theta(wrap_angle(theta_)) {}

    static Pose identity() { return {}; }
};

/// Planar body-frame twist (xi_x, xi_y, xi_theta).
///
/// Used both as an instantaneous velocity and, in the displacement
/// predictor, as an accumulated pre-exponential displacement.
struct Twist {
    double x{0.0};
    double y{0.0};
    double theta{0.0};

    constexpr Twist() = default;
    Twist(double x_, double y_, double theta_) : x(x_), y(y_), theta(theta_) {
        if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(theta)))
            throw std::invalid_argument("Twist: components must be finite");
    }

    Twist scaled_by(double k) const { return {x * k, y * k, theta * k}; }

    friend Twist operator+(const Twist& a, const Twist& b) {
        return {a.x + b.x, a.y + b.y, a.theta + b.theta};
    }
    friend Twist operator-(const Twist& a, const Twist& b) {
        return {a.x - b.x, a.y - b.y, a.theta - b.theta};
    }
};

/// Group composition: g1 followed by g2 expressed in g1's frame.
Pose compose(const Pose& g1, const Pose& g2);

/// Group inverse: compose(g, inverse(g)) is the identity.
Pose inverse(const Pose& g);

/// Exponential map: the pose reached by flowing the constant body twist
/// `v` for unit time (a constant-curvature arc).
///
/// For |v.theta| below a small threshold a truncated-series branch is
/// used to avoid cancellation in (1 - cos w)/w; the two branches agree
/// to well below 1e-12 at the switch.
Pose exp_twist(const Twist& v);

/// World-frame rate of change of g under body twist xi:
/// (xdot, ydot, thetadot) with the linear part rotated through g.theta.
Twist world_rate(const Pose& g, const Twist& xi);

/// Advance g by one explicit Euler step of world_rate(g, xi).
/// This is the frame-reconstruction RHS evaluation used by the
/// trajectory integrator.
Pose step_world(const Pose& g, const Twist& xi, double dt);

}  // namespace scaleswim
