#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "scaleswim/geom.hpp"

namespace scaleswim {

/// Drag model parameters for the two-link swimmer.
///
/// Only ratios matter for motility (it is invariant to the overall drag
/// scale and similar in L); the defaults are lat_ratio = 2, rough_ratio = 4,
/// smooth_ratio = 1 with unit link length and unit baseline drag.
struct DragParams {
    double L = 1.0;             ///< link length
    double c_lon = 1.0;         ///< baseline longitudinal drag coefficient
    double lat_ratio = 2.0;     ///< c_lat / c_lon
    double rough_ratio = 4.0;   ///< c_lon_minus / c_lon (backward drag of a rough link)
    double smooth_ratio = 1.0;  ///< c_lon_plus / c_lon (forward drag)
    double alpha_max = M_PI - 0.05;  ///< shape domain guard; the model degenerates as |alpha| -> pi

    double c_lat() const { return lat_ratio * c_lon; }
    double c_lon_plus() const { return smooth_ratio * c_lon; }
    double c_lon_minus() const { return rough_ratio * c_lon; }

    /// Throws std::invalid_argument on non-positive values or
    /// rough_ratio < smooth_ratio (scales never make backward drag smaller).
    void validate() const;
};

/// Longitudinal surface character of a link in the piecewise model.
enum class Roughness : std::uint8_t { Smooth, Rough };

/// Ordered (front, rear) roughness assignment; exactly four values.
///
/// The pair is listed from the far link toward the head: `rear` is the
/// roughness of link 1 (the head-side link) and `front` that of link 2.
/// With this attachment the Smooth-Rough swimmer is the one consistent with
/// the scale rule wherever sign(alpha) = sign(alpha_dot).
struct Variant {
    Roughness front;
    Roughness rear;

    bool operator==(const Variant&) const = default;

    static constexpr Variant SS() { return {Roughness::Smooth, Roughness::Smooth}; }
    static constexpr Variant SR() { return {Roughness::Smooth, Roughness::Rough}; }
    static constexpr Variant RS() { return {Roughness::Rough, Roughness::Smooth}; }
    static constexpr Variant RR() { return {Roughness::Rough, Roughness::Rough}; }

    static constexpr std::array<Variant, 4> all() { return {SS(), SR(), RS(), RR()}; }
};

std::string to_string(Variant v);

/// Joint angle and joint rate.
struct ShapeState {
    double alpha = 0.0;
    double alpha_dot = 0.0;
};

/// The net drag force split into its body-twist block and shape-rate column:
/// the balance reads F_g * xi + F_alpha * alpha_dot = 0.
struct ForceSplit {
    Eigen::Matrix3d F_g;      ///< symmetric negative-definite for |alpha| <= alpha_max
    Eigen::Vector3d F_alpha;
};

/// Body velocity per unit joint rate, (A_x, A_y, A_theta).
struct MotilityVector {
    double x{0.0};
    double y{0.0};
    double theta{0.0};

    constexpr MotilityVector() = default;
    MotilityVector(double x_, double y_, double theta_) : x(x_), y(y_), theta(theta_) {
        if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(theta)))
            throw std::invalid_argument("MotilityVector: components must be finite");
    }

    /// Body twist produced at joint rate alpha_dot.
    Twist times(double alpha_dot) const { return {x * alpha_dot, y * alpha_dot, theta * alpha_dot}; }

    friend MotilityVector operator-(const MotilityVector& a, const MotilityVector& b) {
        return {a.x - b.x, a.y - b.y, a.theta - b.theta};
    }
};

/// Frames of the two links in the body frame, with their analytic
/// derivatives with respect to the joint angle.
///
/// The body frame sits at the joint with its x-axis along the bisector of
/// the two link directions; link frames sit at the link midpoints with the
/// x-axis pointing toward the head. Positive alpha bends the front link
/// toward +y.
struct LinkConfiguration {
    Pose front;        ///< front link frame, orientation +alpha/2
    Pose rear;         ///< rear link frame, orientation -alpha/2
    Twist d_front;     ///< componentwise d(front)/d(alpha)
    Twist d_rear;      ///< componentwise d(rear)/d(alpha)
};

/// Throws ShapeDomainError unless |alpha| <= params.alpha_max.
void ensure_in_shape_domain(double alpha, const DragParams& params);

LinkConfiguration link_configurations(double alpha, const DragParams& params);

/// Jacobian of link `i` (1 = front, 2 = rear): maps the body configuration
/// velocity (xi_x, xi_y, xi_theta, alpha_dot) to the link's body-frame
/// velocity. Columns 1-3 are the planar adjoint action of the link pose,
/// column 4 the shape-derivative column.
Eigen::Matrix<double, 3, 4> link_jacobian(int i, double alpha, const DragParams& params);

/// Per-link drag matrix: -L * diag(c_lon, c_lat, (1/12) c_lat L^2), with the
/// longitudinal entry resolved by the scale rule: c_lon_plus when the link is
/// smooth or moving forward, c_lon_minus when rough and moving backward.
Eigen::Matrix3d drag_matrix(Roughness r, bool forward, const DragParams& params);

/// Fixed-variant form: roughness alone selects the longitudinal entry
/// (Smooth -> c_lon_plus, Rough -> c_lon_minus).
Eigen::Matrix3d drag_matrix(Roughness r, const DragParams& params);

/// Net drag of both links pulled back to the body frame and restricted to
/// its three body rows, split into the 3x3 twist block and 3x1 shape column.
ForceSplit force_split(double alpha, Variant v, const DragParams& params);

/// Motility function of the fixed-roughness swimmer: A = -F_g^{-1} F_alpha.
/// Throws SingularConfigurationError when F_g is near-singular
/// (condition number >= 1e12).
MotilityVector motility(double alpha, Variant v, const DragParams& params);

/// Longitudinal (link-frame x) velocity of each link under body twist xi
/// and joint rate alpha_dot. Constant along each rigid link.
std::pair<double, double> link_longitudinal_velocities(double alpha, double alpha_dot,
                                                       const Twist& xi, const DragParams& params);

}  // namespace scaleswim
