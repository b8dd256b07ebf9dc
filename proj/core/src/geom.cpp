#include "scaleswim/geom.hpp"

namespace scaleswim {

namespace {

// Switch to the series branch of exp_twist below this rotation magnitude.
constexpr double kSmallRotation = 1e-6;

}  // namespace

Pose compose(const Pose& g1, const Pose& g2) {
    const double c = std::cos(g1.theta);
    const double s = std::sin(g1.theta);
    return {g1.x + c * g2.x - s * g2.y,
            g1.y + s * g2.x + c * g2.y,
            g1.theta + g2.theta};
}

Pose inverse(const Pose& g) {
    const double c = std::cos(g.theta);
    const double s = std::sin(g.theta);
    return {-(c * g.x + s * g.y),
            -(-s * g.x + c * g.y),
            -g.theta};
}

Pose exp_twist(const Twist& v) {
    const double w = v.theta;
    double sinc, versc;  // sin(w)/w and (1 - cos(w))/w
    if (std::abs(w) < kSmallRotation) {
        const double w2 = w * w;
        sinc = 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
        versc = w * (0.5 - w2 / 24.0 + w2 * w2 / 720.0);
    } else {
        sinc = std::sin(w) / w;
        versc = (1.0 - std::cos(w)) / w;
    }
    return {v.x * sinc - v.y * versc,
            v.x * versc + v.y * sinc,
            w};
}

Twist world_rate(const Pose& g, const Twist& xi) {
    const double c = std::cos(g.theta);
    const double s = std::sin(g.theta);
    return {c * xi.x - s * xi.y,
            s * xi.x + c * xi.y,
            xi.theta};
}

Pose step_world(const Pose& g, const Twist& xi, double dt) {
    const Twist rate = world_rate(g, xi);
    return {g.x + rate.x * dt,
            g.y + rate.y * dt,
            g.theta + rate.theta * dt};
}

}  // namespace scaleswim
