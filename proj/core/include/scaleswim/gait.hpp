#pragma once

#include <array>
#include <memory>
#include <utility>
#include <vector>

#include "scaleswim/scaled.hpp"

namespace scaleswim {

/// A closed periodic shape trajectory alpha(t).
///
/// Implementations must report where the joint rate changes sign (the
/// branch-switch events of the piecewise model) so that integration and
/// quadrature never straddle a switch.
class Gait {
public:
    virtual ~Gait() = default;

    virtual double period() const = 0;

    /// Shape and shape rate at time t (t is reduced modulo the period).
    virtual ShapeState shape_at(double t) const = 0;

    /// Times in [0, period) where alpha_dot changes sign, sorted ascending.
    /// Empty for a constant gait.
    virtual std::vector<double> rate_sign_changes() const = 0;

    /// Times in [0, period) where the gait's higher time derivatives jump
    /// (interpolation nodes); empty for analytic gaits.
    virtual std::vector<double> breakpoints() const { return {}; }

    /// Throws GaitError unless the whole cycle stays inside the shape domain.
    virtual void validate(const DragParams& params) const = 0;

    virtual std::unique_ptr<Gait> clone() const = 0;
};

/// alpha(t) = offset + amplitude * sin(2 pi t / period + phase).
class SinusoidGait final : public Gait {
public:
    SinusoidGait(double offset, double amplitude, double period, double phase = 0.0);

    double offset() const { return offset_; }
    double amplitude() const { return amplitude_; }
    double phase() const { return phase_; }

    double period() const override { return period_; }
    ShapeState shape_at(double t) const override;
    std::vector<double> rate_sign_changes() const override;
    void validate(const DragParams& params) const override;
    std::unique_ptr<Gait> clone() const override { return std::make_unique<SinusoidGait>(*this); }

private:
    double offset_, amplitude_, period_, phase_;
};

/// Closed loop through (t, alpha) waypoints, interpolated by a periodic
/// cubic spline (continuously differentiable rate across the whole cycle,
/// including the wrap).
class WaypointGait final : public Gait {
public:
    /// Nodes must have strictly increasing times and matching first/last
    /// alpha; at least three nodes. Throws GaitError otherwise.
    explicit WaypointGait(std::vector<std::pair<double, double>> nodes);

    const std::vector<std::pair<double, double>>& nodes() const { return nodes_; }

    double period() const override { return t_.back() - t_.front(); }
    ShapeState shape_at(double t) const override;
    std::vector<double> rate_sign_changes() const override;
    std::vector<double> breakpoints() const override;
    void validate(const DragParams& params) const override;
    std::unique_ptr<Gait> clone() const override { return std::make_unique<WaypointGait>(*this); }

private:
    std::size_t segment_of(double tau) const;
    void eval_segment(std::size_t seg, double tau, double* alpha, double* alpha_dot) const;
    /// Extrema of alpha over one cycle (segment-exact, not sampled).
    std::pair<double, double> alpha_range() const;

    std::vector<std::pair<double, double>> nodes_;
    std::vector<double> t_;   // node times
    std::vector<double> a_;   // node values, a_.front() == a_.back()
    std::vector<double> m_;   // spline second derivatives per node (periodic)
};

/// Times in [0, period) where alpha crosses zero with nonzero rate.
/// Implemented by bisection on the monotone arcs between rate sign changes,
/// so it applies to any gait.
std::vector<double> zero_crossings(const Gait& gait);

/// One record of the simulated reconstruction.
struct TrajectorySample {
    double t;
    Pose g;
    double alpha;
    double alpha_dot;
    Twist xi;
};

using Trajectory = std::vector<TrajectorySample>;

struct SimResult {
    Trajectory trajectory;  ///< strictly increasing t, first pose = identity
    Pose delta_g;           ///< final pose relative to the start
};

/// Integrate the reconstruction equation gdot = R(theta) * A(alpha, sign
/// alpha_dot) * alpha_dot over `cycles` cycles with a fixed-step 4th-order
/// scheme. Steps are laid out so that none straddles a rate sign change, a
/// zero crossing of alpha, or an interpolation breakpoint; the scheme keeps
/// its order on every smooth arc.
SimResult simulate(const Gait& gait, const Model& model, const DragParams& params,
                   int steps_per_cycle = 4096, int cycles = 1);

/// Pre-exponential displacement and its exponential correction.
struct Prediction {
    Twist delta_g_prime;  ///< accumulated body-frame displacement over one cycle
    Pose delta_g;         ///< exp_twist(delta_g_prime), always by construction
};

/// Predict the single-cycle displacement as the path integral of the
/// motility over the gait, closed-form equivalent of accumulating the body
/// velocity in a single frame. Composite Simpson per smooth arc.
Prediction predict_displacement(const Gait& gait, const Model& model, const DragParams& params,
                                int panels_per_segment = 2048);

/// Same prediction through the simple-range form: the integral of the
/// branch difference A_plus - A_minus over [alpha_min, alpha_max]. Only
/// valid when the gait covers each alpha value at most twice per cycle
/// (exactly one rising and one falling arc); throws GaitError otherwise.
Prediction predict_displacement_range(const Gait& gait, const Model& model,
                                      const DragParams& params, int panels = 2048);

/// Side-by-side simulated and predicted displacement.
struct DisplacementReport {
    Pose dg_sim;
    Twist dg_prime;              ///< prediction accumulated over all cycles
    Pose dg_pred;                ///< exp_twist(dg_prime)
    std::array<double, 3> abs_err;  ///< |sim - pred| per component
    double rel_err;              ///< norm of the difference over max(norm(sim), 1e-12)
};

DisplacementReport compare(const Gait& gait, const Model& model, const DragParams& params,
                           int steps_per_cycle = 4096, int cycles = 1);

}  // namespace scaleswim
