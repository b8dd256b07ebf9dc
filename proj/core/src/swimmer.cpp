#include "scaleswim/swimmer.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "scaleswim/errors.hpp"

namespace scaleswim {

namespace {

constexpr double kMaxCondition = 1e12;

Eigen::Matrix2d rot(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    Eigen::Matrix2d R;
    R << c, -s, s, c;
    return R;
}

}  // namespace

void DragParams::validate() const {
    if (!(L > 0.0) || !(c_lon > 0.0) || !(lat_ratio > 0.0) || !(rough_ratio > 0.0) ||
        !(smooth_ratio > 0.0))
        throw std::invalid_argument("DragParams: lengths, coefficients and ratios must be positive");
    if (rough_ratio < smooth_ratio)
        throw std::invalid_argument("DragParams: rough_ratio must be >= smooth_ratio");
    if (!(alpha_max > 0.0) || !(alpha_max < M_PI))
        throw std::invalid_argument("DragParams: alpha_max must lie in (0, pi)");
}

std::string to_string(Variant v) {
    std::string s;
    s += (v.front == Roughness::Smooth) ? 'S' : 'R';
    s += (v.rear == Roughness::Smooth) ? 'S' : 'R';
    return s;
}

void ensure_in_shape_domain(double alpha, const DragParams& params) {
    if (!(std::abs(alpha) <= params.alpha_max))
        throw ShapeDomainError("joint angle " + std::to_string(alpha) +
                               " outside the shape domain |alpha| <= " +
                               std::to_string(params.alpha_max));
}

LinkConfiguration link_configurations(double alpha, const DragParams& params) {
    ensure_in_shape_domain(alpha, params);
    const double half = 0.5 * alpha;
    const double c = std::cos(half), s = std::sin(half);
    const double r = 0.5 * params.L;

    LinkConfiguration cfg;
    cfg.front = Pose(r * c, r * s, half);
    cfg.rear = Pose(-r * c, r * s, -half);
    // d/dalpha of the above; the chain rule contributes the factor 1/2.
    cfg.d_front = Twist(-0.5 * r * s, 0.5 * r * c, 0.5);
    cfg.d_rear = Twist(0.5 * r * s, 0.5 * r * c, -0.5);
    return cfg;
}

Eigen::Matrix<double, 3, 4> link_jacobian(int i, double alpha, const DragParams& params) {
    if (i != 1 && i != 2) throw std::invalid_argument("link_jacobian: link index must be 1 or 2");
    const LinkConfiguration cfg = link_configurations(alpha, params);
    const Pose& h = (i == 1) ? cfg.front : cfg.rear;
    const Twist& dh = (i == 1) ? cfg.d_front : cfg.d_rear;

    const Eigen::Matrix2d Rt = rot(h.theta).transpose();

    Eigen::Matrix<double, 3, 4> J = Eigen::Matrix<double, 3, 4>::Zero();
    J.block<2, 2>(0, 0) = Rt;
    J.block<2, 1>(0, 2) = Rt * Eigen::Vector2d(-h.y, h.x);
    J(2, 2) = 1.0;
    J.block<2, 1>(0, 3) = Rt * Eigen::Vector2d(dh.x, dh.y);
    J(2, 3) = dh.theta;
    return J;
}

Eigen::Matrix3d drag_matrix(Roughness r, bool forward, const DragParams& params) {
    const double lon =
        (r == Roughness::Smooth || forward) ? params.c_lon_plus() : params.c_lon_minus();
    const double lat = params.c_lat();
    Eigen::Vector3d d(lon, lat, lat * params.L * params.L / 12.0);
    return -params.L * d.asDiagonal().toDenseMatrix();
}

Eigen::Matrix3d drag_matrix(Roughness r, const DragParams& params) {
    return drag_matrix(r, /*forward=*/false, params);
}

ForceSplit force_split(double alpha, Variant v, const DragParams& params) {
    params.validate();
    ensure_in_shape_domain(alpha, params);

    Eigen::Matrix4d F4 = Eigen::Matrix4d::Zero();
    // The variant pair is listed from the far link toward the head: `rear`
    // rides link 1 (the head-side link at +x), `front` rides link 2.
    const Roughness roughness[2] = {v.rear, v.front};
    for (int i = 0; i < 2; ++i) {
        const Eigen::Matrix<double, 3, 4> J = link_jacobian(i + 1, alpha, params);
        const Eigen::Matrix3d C = drag_matrix(roughness[i], params);
        F4 += J.transpose() * C * J;
    }

    // The Pfaffian constraint uses only the three body rows; the fourth row
    // is the actuated joint.
    ForceSplit split;
    split.F_g = F4.topLeftCorner<3, 3>();
    split.F_alpha = F4.topRightCorner<3, 1>();
    return split;
}

MotilityVector motility(double alpha, Variant v, const DragParams& params) {
    const ForceSplit split = force_split(alpha, v, params);

    // -F_g is symmetric positive definite (drag dissipates energy), so the
    // condition number is the eigenvalue ratio and the solve is a Cholesky.
    const Eigen::Matrix3d M = -split.F_g;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(M, Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues()(0);
    const double hi = eig.eigenvalues()(2);
    if (!(lo > 0.0) || hi >= kMaxCondition * lo)
        throw SingularConfigurationError("force balance is near-singular at alpha = " +
                                         std::to_string(alpha));

    const Eigen::Vector3d A = M.llt().solve(split.F_alpha);
    return {A(0), A(1), A(2)};
}

std::pair<double, double> link_longitudinal_velocities(double alpha, double alpha_dot,
                                                       const Twist& xi, const DragParams& params) {
    const Eigen::Vector4d q(xi.x, xi.y, xi.theta, alpha_dot);
    const double u1 = link_jacobian(1, alpha, params).row(0).dot(q);
    const double u2 = link_jacobian(2, alpha, params).row(0).dot(q);
    return {u1, u2};
}

}  // namespace scaleswim
