#pragma once

#include <span>
#include <vector>

#include "scaleswim/swimmer.hpp"

namespace scaleswim {

/// Sign of the joint rate, selecting between the two branches of the
/// piecewise motility function.
enum class RateSign : std::uint8_t { Plus, Minus };

inline RateSign rate_sign_of(double alpha_dot) {
    return alpha_dot >= 0.0 ? RateSign::Plus : RateSign::Minus;
}

/// One variant whose fixed-roughness motion is compatible with the scale
/// rule at a queried (alpha, alpha_dot).
struct ConsistencyEntry {
    Variant variant;
    Twist xi;      ///< body velocity of that variant, motility(alpha, variant) * alpha_dot
    double u1;     ///< front link longitudinal velocity
    double u2;     ///< rear link longitudinal velocity
    bool strict;   ///< both sign conditions hold strictly (outside the tie band)
};

/// All variants consistent at a queried point. Non-empty for every point in
/// the shape domain; exactly one strict entry off the quadrant boundaries.
struct ConsistencyResult {
    std::vector<ConsistencyEntry> entries;

    std::vector<ConsistencyEntry> strict_entries() const;
};

/// Tie tolerance on longitudinal-velocity signs. A link with zero
/// longitudinal velocity is drag-free under either matrix, so ties are
/// admitted for both roughness labels.
inline constexpr double kConsistencyTol = 1e-12;

/// Brute-force resolution of the scale rule: for each of the four fixed
/// variants, solve the force balance and check that every link's roughness
/// matches the sign of its own longitudinal velocity (smooth requires
/// u >= -tol, rough requires u <= +tol).
ConsistencyResult resolve_consistent_variants(double alpha, double alpha_dot,
                                              const DragParams& params,
                                              double tol = kConsistencyTol);

/// Piecewise motility of the scaled swimmer: the plus branch is the
/// Smooth-Rough motility for alpha >= 0 and Rough-Smooth for alpha <= 0,
/// the minus branch the reverse. Both branches agree at alpha = 0.
MotilityVector scaled_motility(double alpha, RateSign sign, const DragParams& params);

/// Difference of the two branches; its y component vanishes identically and
/// its x component is positive for all nonzero alpha.
MotilityVector motility_diff(double alpha, const DragParams& params);

/// Motility model used by the gait simulator and predictor: either one of
/// the four fixed-roughness swimmers, or the scaled piecewise swimmer.
class Model {
public:
    static Model fixed(Variant v) { return Model(true, v); }
    static Model scaled() { return Model(false, Variant::SS()); }

    bool is_fixed() const { return fixed_; }
    Variant variant() const { return variant_; }

    MotilityVector motility_at(double alpha, RateSign sign, const DragParams& params) const {
        return fixed_ ? motility(alpha, variant_, params) : scaled_motility(alpha, sign, params);
    }

    std::string name() const { return fixed_ ? to_string(variant_) : "scaled"; }

private:
    Model(bool fixed, Variant v) : fixed_(fixed), variant_(v) {}
    bool fixed_;
    Variant variant_;
};

/// Variant label per (alpha, alpha_dot) grid cell.
struct SurveyGrid {
    std::vector<double> alpha;      ///< ordered alpha samples
    std::vector<double> alpha_dot;  ///< ordered alpha_dot samples
    std::vector<Variant> cells;     ///< row-major: cells[ia * alpha_dot.size() + ir]

    Variant at(std::size_t ia, std::size_t ir) const { return cells[ia * alpha_dot.size() + ir]; }
};

/// Brute-force survey of the consistent variant over a grid. Interior cells
/// carry the unique strict entry; cells on the axes (where all four variants
/// tie) carry the deterministic quadrant label: Smooth-Rough where
/// sign(alpha) = sign(alpha_dot), Rough-Smooth otherwise.
SurveyGrid consistency_survey(std::span<const double> alpha_samples,
                              std::span<const double> alpha_dot_samples,
                              const DragParams& params);

}  // namespace scaleswim
