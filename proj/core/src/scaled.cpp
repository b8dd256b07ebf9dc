#include "scaleswim/scaled.hpp"

#include <stdexcept>

namespace scaleswim {

namespace {

bool roughness_matches(Roughness r, double u, double tol) {
    return (r == Roughness::Smooth) ? (u >= -tol) : (u <= tol);
}

bool roughness_matches_strictly(Roughness r, double u, double tol) {
    return (r == Roughness::Smooth) ? (u > tol) : (u < -tol);
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

std::vector<ConsistencyEntry> ConsistencyResult::strict_entries() const {
    std::vector<ConsistencyEntry> out;
    for (const auto& e : entries)
        if (e.strict) out.push_back(e);
    return out;
}

ConsistencyResult resolve_consistent_variants(double alpha, double alpha_dot,
                                              const DragParams& params, double tol) {
    ConsistencyResult result;
    for (Variant v : Variant::all()) {
        const Twist xi = motility(alpha, v, params).times(alpha_dot);
        const auto [u1, u2] = link_longitudinal_velocities(alpha, alpha_dot, xi, params);
        // Variant letters ride the links far-to-head: rear <-> link 1, front <-> link 2.
        if (roughness_matches(v.rear, u1, tol) && roughness_matches(v.front, u2, tol)) {
            const bool strict = roughness_matches_strictly(v.rear, u1, tol) &&
                                roughness_matches_strictly(v.front, u2, tol);
            result.entries.push_back({v, xi, u1, u2, strict});
        }
    }
    if (result.entries.empty())
        // Model violation: the piecewise construction guarantees a consistent
        // variant at every point of the domain.
        throw std::logic_error("no variant consistent with the scale rule at alpha = " +
                               std::to_string(alpha) + ", alpha_dot = " + std::to_string(alpha_dot));
    return result;
}

MotilityVector scaled_motility(double alpha, RateSign sign, const DragParams& params) {
    const bool plus = (sign == RateSign::Plus);
    const Variant v = (alpha >= 0.0) == plus ? Variant::SR() : Variant::RS();
    return motility(alpha, v, params);
}

MotilityVector motility_diff(double alpha, const DragParams& params) {
    return scaled_motility(alpha, RateSign::Plus, params) -
           scaled_motility(alpha, RateSign::Minus, params);
}

SurveyGrid consistency_survey(std::span<const double> alpha_samples,
                              std::span<const double> alpha_dot_samples,
                              const DragParams& params) {
    SurveyGrid grid;
    grid.alpha.assign(alpha_samples.begin(), alpha_samples.end());
    grid.alpha_dot.assign(alpha_dot_samples.begin(), alpha_dot_samples.end());
    grid.cells.reserve(grid.alpha.size() * grid.alpha_dot.size());

    for (double a : grid.alpha) {
        for (double ad : grid.alpha_dot) {
            const auto strict = resolve_consistent_variants(a, ad, params).strict_entries();
            if (strict.size() == 1) {
                grid.cells.push_back(strict.front().variant);
            } else {
                // On the axes all four variants tie; label by quadrant.
                grid.cells.push_back(sign_of(a) == sign_of(ad) ? Variant::SR() : Variant::RS());
            }
        }
    }
    return grid;
}

}  // namespace scaleswim
