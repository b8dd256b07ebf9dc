#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "scaleswim/geom.hpp"

using namespace scaleswim;

namespace {

bool pose_close(const Pose& a, const Pose& b, double tol) {
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol &&
           std::abs(wrap_angle(a.theta - b.theta)) <= tol;
}

// Oracle for the exponential map: flow the twist in n small slices, each a
// symmetric rotate-translate-rotate split. Converges quadratically in 1/n.
Pose exp_oracle(const Twist& v, int n) {
    const Pose half_rot(0.0, 0.0, 0.5 * v.theta / n);
    const Pose slide(v.x / n, v.y / n, 0.0);
    Pose g;
    for (int i = 0; i < n; ++i) g = compose(compose(compose(g, half_rot), slide), half_rot);
    return g;
}

double pose_distance(const Pose& a, const Pose& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y),
                     std::abs(wrap_angle(a.theta - b.theta))});
}

}  // namespace

TEST_CASE("wrap_angle maps to (-pi, pi]") {
    CHECK(wrap_angle(M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_angle(-M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_angle(3.0 * M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_angle(0.25) == doctest::Approx(0.25));
    CHECK(wrap_angle(2.0 * M_PI + 0.25) == doctest::Approx(0.25));
}

TEST_CASE("compose: identity, quarter turn, inverse") {
    const Pose g(0.7, -1.2, 0.9);
    CHECK(pose_close(compose(Pose(), g), g, 1e-15));
    CHECK(pose_close(compose(g, Pose()), g, 1e-15));

    // A quarter-turn frame maps a forward step to +y.
    CHECK(pose_close(compose(Pose(1.0, 0.0, M_PI_2), Pose(1.0, 0.0, 0.0)),
                     Pose(1.0, 1.0, M_PI_2), 1e-15));

    CHECK(pose_close(compose(g, inverse(g)), Pose(), 1e-15));
    CHECK(pose_close(compose(inverse(g), g), Pose(), 1e-15));
}

TEST_CASE("compose is associative") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> pos(-5.0, 5.0), ang(-3.0 * M_PI, 3.0 * M_PI);
    for (int i = 0; i < 200; ++i) {
        const Pose a(pos(rng), pos(rng), ang(rng));
        const Pose b(pos(rng), pos(rng), ang(rng));
        const Pose c(pos(rng), pos(rng), ang(rng));
        CHECK(pose_close(compose(compose(a, b), c), compose(a, compose(b, c)), 1e-12));
    }
}

TEST_CASE("exp_twist: pure translation and pure rotation") {
    CHECK(pose_close(exp_twist(Twist(0.8, -0.3, 0.0)), Pose(0.8, -0.3, 0.0), 1e-15));
    CHECK(pose_close(exp_twist(Twist(0.0, 0.0, 1.1)), Pose(0.0, 0.0, 1.1), 1e-15));
}

TEST_CASE("exp_twist quarter-circle arc matches closed form and oracle") {
    // Oracle run: n-slice flow converges to the closed-form arc value.
    const Twist v(1.0, 0.0, M_PI_2);
    const Pose expected(2.0 / M_PI, 2.0 / M_PI, M_PI_2);
    CHECK(pose_distance(exp_oracle(v, 1 << 12), expected) < 1e-7);
    CHECK(pose_close(exp_twist(v), expected, 1e-12));
}

TEST_CASE("exp_twist equals the n-step flow limit, quadratically") {
    const Twist v(1.0, 0.4, 2.1);
    const Pose exact = exp_twist(v);
    double prev = 0.0;
    for (int k = 4; k <= 10; ++k) {
        const double err = pose_distance(exp_oracle(v, 1 << k), exact);
        if (k > 4) CHECK(prev / err > 3.5);  // second order: ratio ~ 4 per halving
        prev = err;
    }
}

TEST_CASE("exp_twist is continuous across the series-branch switch") {
    const double w0 = 1e-6;
    for (double sign : {1.0, -1.0}) {
        const Pose below = exp_twist(Twist(0.7, -0.4, sign * w0 * (1.0 - 1e-9)));
        const Pose above = exp_twist(Twist(0.7, -0.4, sign * w0 * (1.0 + 1e-9)));
        CHECK(pose_distance(below, above) < 1e-10);
    }
}

TEST_CASE("step_world examples") {
    CHECK(pose_close(step_world(Pose(), Twist(1.0, 0.0, 0.0), 0.5), Pose(0.5, 0.0, 0.0), 1e-15));
    // Rotated frame: a body-x step becomes world +y.
    CHECK(pose_close(step_world(Pose(0.0, 0.0, M_PI_2), Twist(1.0, 0.0, 0.0), 1.0),
                     Pose(0.0, 1.0, M_PI_2), 1e-15));
    const Pose g(0.3, 0.4, -1.2);
    CHECK(pose_close(step_world(g, Twist(), 0.7), g, 1e-15));
}

TEST_CASE("Twist rejects non-finite components") {
    CHECK_THROWS_AS(Twist(std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(Twist(0.0, std::numeric_limits<double>::infinity(), 0.0),
                    std::invalid_argument);
}
