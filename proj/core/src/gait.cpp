#include "scaleswim/gait.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "scaleswim/errors.hpp"

namespace scaleswim {

namespace {

double positive_fmod(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0.0) r += period;
    return r;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

void sort_unique(std::vector<double>& times, double tol) {
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end(),
                            [tol](double a, double b) { return std::abs(a - b) <= tol; }),
                times.end());
}

}  // namespace

// ---------------------------------------------------------------------------
// SinusoidGait

SinusoidGait::SinusoidGait(double offset, double amplitude, double period, double phase)
    : offset_(offset), amplitude_(amplitude), period_(period), phase_(phase) {
    if (!(period_ > 0.0)) throw GaitError("sinusoid gait: period must be positive");
    if (!(amplitude_ >= 0.0)) throw GaitError("sinusoid gait: amplitude must be non-negative");
    if (!std::isfinite(offset_) || !std::isfinite(phase_))
        throw GaitError("sinusoid gait: offset and phase must be finite");
}

ShapeState SinusoidGait::shape_at(double t) const {
    const double w = 2.0 * M_PI / period_;
    const double u = w * t + phase_;
    return {offset_ + amplitude_ * std::sin(u), amplitude_ * w * std::cos(u)};
}

std::vector<double> SinusoidGait::rate_sign_changes() const {
    if (amplitude_ == 0.0) return {};
    // cos(w t + phase) = 0 at w t + phase = pi/2 + k pi; exactly two per cycle.
    const double w = 2.0 * M_PI / period_;
    std::vector<double> out;
    const long k0 = static_cast<long>(std::ceil((phase_ - M_PI_2) / M_PI));
    for (long k = k0 - 1; k <= k0 + 2; ++k) {
        const double t = (M_PI_2 + static_cast<double>(k) * M_PI - phase_) / w;
        if (t >= 0.0 && t < period_) out.push_back(t);
    }
    sort_unique(out, 1e-12 * period_);
    return out;
}

void SinusoidGait::validate(const DragParams& params) const {
    if (!(std::abs(offset_) + amplitude_ <= params.alpha_max))
        throw GaitError("sinusoid gait leaves the shape domain: |offset| + amplitude > alpha_max");
}

// ---------------------------------------------------------------------------
// WaypointGait

WaypointGait::WaypointGait(std::vector<std::pair<double, double>> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 3) throw GaitError("waypoint gait: need at least three nodes");
    t_.reserve(nodes_.size());
    a_.reserve(nodes_.size());
    for (const auto& [t, a] : nodes_) {
        if (!std::isfinite(t) || !std::isfinite(a))
            throw GaitError("waypoint gait: nodes must be finite");
        if (!t_.empty() && !(t > t_.back()))
            throw GaitError("waypoint gait: node times must be strictly increasing");
        t_.push_back(t);
        a_.push_back(a);
    }
    if (std::abs(a_.front() - a_.back()) > 1e-12 * std::max(1.0, std::abs(a_.front())))
        throw GaitError("waypoint gait: loop must close (first alpha = last alpha)");
    a_.back() = a_.front();

    // Periodic cubic spline: solve the cyclic system for the second
    // derivatives at the n distinct nodes.
    const std::size_t n = t_.size() - 1;  // number of segments
    auto h = [&](std::size_t i) { return t_[i + 1] - t_[i]; };

    Eigen::MatrixXd S =
        Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t prev = (i + n - 1) % n;
        const double hp = h(prev), hi = h(i);
        S(i, prev) += hp / 6.0;
        S(i, i) += (hp + hi) / 3.0;
        S(i, (i + 1) % n) += hi / 6.0;
        rhs(i) = (a_[i + 1] - a_[i]) / hi - (a_[i] - a_[prev]) / hp;
    }
    m_.resize(n);
    Eigen::Map<Eigen::VectorXd>(m_.data(), static_cast<Eigen::Index>(n)) =
        S.partialPivLu().solve(rhs);
}

std::size_t WaypointGait::segment_of(double tau) const {
    const auto it = std::upper_bound(t_.begin(), t_.end(), tau);
    const std::size_t idx = static_cast<std::size_t>(std::distance(t_.begin(), it));
    if (idx == 0) return 0;
    return std::min(idx - 1, t_.size() - 2);
}

void WaypointGait::eval_segment(std::size_t seg, double tau, double* alpha,
                                double* alpha_dot) const {
    const std::size_t n = t_.size() - 1;
    const double h = t_[seg + 1] - t_[seg];
    const double A = (t_[seg + 1] - tau) / h;
    const double B = (tau - t_[seg]) / h;
    const double mi = m_[seg];
    const double mj = m_[(seg + 1) % n];
    const double yi = a_[seg];
    const double yj = a_[seg + 1];
    if (alpha)
        *alpha = A * yi + B * yj + ((A * A * A - A) * mi + (B * B * B - B) * mj) * h * h / 6.0;
    if (alpha_dot)
        *alpha_dot = (yj - yi) / h + h / 6.0 * (-(3.0 * A * A - 1.0) * mi + (3.0 * B * B - 1.0) * mj);
}

ShapeState WaypointGait::shape_at(double t) const {
    const double tau = t_.front() + positive_fmod(t - t_.front(), period());
    const std::size_t seg = segment_of(tau);
    ShapeState s;
    eval_segment(seg, tau, &s.alpha, &s.alpha_dot);
    return s;
}

std::vector<double> WaypointGait::rate_sign_changes() const {
    const double T = period();
    const std::size_t n = t_.size() - 1;
    std::vector<double> out;

    auto rate_at = [&](double cycle_t) { return shape_at(t_.front() + cycle_t).alpha_dot; };
    const double eps = 1e-9 * T;
    auto changes_sign_at = [&](double cycle_t) {
        const double before = rate_at(positive_fmod(cycle_t - eps, T));
        const double after = rate_at(positive_fmod(cycle_t + eps, T));
        return sign_of(before) * sign_of(after) < 0;
    };

    for (std::size_t seg = 0; seg < n; ++seg) {
        // alpha_dot is quadratic on each segment: c2 s^2 + c1 s + c0, s = tau - t_seg.
        const double h = t_[seg + 1] - t_[seg];
        const double mi = m_[seg];
        const double mj = m_[(seg + 1) % n];
        const double d = (a_[seg + 1] - a_[seg]) / h;
        const double c0 = d + (mi - mj) * h / 6.0 - mi * h / 2.0;
        const double c1 = mi;
        const double c2 = (mj - mi) / (2.0 * h);

        double roots[2];
        int nroots = 0;
        if (std::abs(c2) < 1e-14 * std::max(std::abs(c1), std::abs(c0)) / std::max(h, 1.0) ||
            c2 == 0.0) {
            if (c1 != 0.0) roots[nroots++] = -c0 / c1;
        } else {
            const double disc = c1 * c1 - 4.0 * c2 * c0;
            if (disc >= 0.0) {
                const double sq = std::sqrt(disc);
                // Stable quadratic roots.
                const double q = -0.5 * (c1 + std::copysign(sq, c1));
                roots[nroots++] = q / c2;
                if (q != 0.0) roots[nroots++] = c0 / q;
            }
        }
        for (int r = 0; r < nroots; ++r) {
            const double s = roots[r];
            if (!(s >= 0.0 && s < h)) continue;
            const double cycle_t = positive_fmod(t_[seg] + s - t_.front(), T);
            if (changes_sign_at(cycle_t)) out.push_back(cycle_t);
        }
    }
    // Sign flips exactly at nodes are not interior roots of either segment.
    for (std::size_t i = 0; i < n; ++i) {
        const double cycle_t = positive_fmod(t_[i] - t_.front(), T);
        if (changes_sign_at(cycle_t)) out.push_back(cycle_t);
    }
    sort_unique(out, 1e-10 * T);
    return out;
}

std::vector<double> WaypointGait::breakpoints() const {
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < t_.size(); ++i) out.push_back(t_[i] - t_.front());
    return out;
}

std::pair<double, double> WaypointGait::alpha_range() const {
    double lo = a_.front(), hi = a_.front();
    for (double v : a_) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    // Interior extrema sit where the rate changes sign.
    for (double ct : rate_sign_changes()) {
        const double v = shape_at(t_.front() + ct).alpha;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

void WaypointGait::validate(const DragParams& params) const {
    const auto [lo, hi] = alpha_range();
    if (!(lo >= -params.alpha_max && hi <= params.alpha_max))
        throw GaitError("waypoint gait leaves the shape domain |alpha| <= alpha_max");
}

// ---------------------------------------------------------------------------
// Shared event machinery

std::vector<double> zero_crossings(const Gait& gait) {
    const double T = gait.period();
    std::vector<double> arcs = gait.rate_sign_changes();
    arcs.insert(arcs.begin(), 0.0);
    arcs.push_back(T);
    sort_unique(arcs, 1e-12 * T);

    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < arcs.size(); ++i) {
        double a = arcs[i], b = arcs[i + 1];
        double fa = gait.shape_at(a).alpha;
        double fb = gait.shape_at(b).alpha;
        // Zeros at arc boundaries are already split points.
        if (std::abs(fa) <= 1e-12 || std::abs(fb) <= 1e-12) continue;
        if (sign_of(fa) * sign_of(fb) >= 0) continue;
        for (int iter = 0; iter < 200 && (b - a) > 1e-15 * T; ++iter) {
            const double mid = 0.5 * (a + b);
            const double fm = gait.shape_at(mid).alpha;
            if (fm == 0.0) {
                a = b = mid;
                break;
            }
            if (sign_of(fm) == sign_of(fa)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        out.push_back(0.5 * (a + b));
    }
    sort_unique(out, 1e-12 * T);
    return out;
}

namespace {

// Split points of one cycle, in cycle coordinates: arc ends where the rate
// changes sign, zero crossings of alpha, interpolation breakpoints.
std::vector<double> cycle_splits(const Gait& gait) {
    const double T = gait.period();
    std::vector<double> splits = gait.rate_sign_changes();
    for (double t : zero_crossings(gait)) splits.push_back(t);
    for (double t : gait.breakpoints()) splits.push_back(t);
    splits.push_back(0.0);
    splits.push_back(T);
    sort_unique(splits, 1e-12 * T);
    if (splits.front() < 0.0) splits.front() = 0.0;
    if (splits.back() > T) splits.back() = T;
    return splits;
}

RateSign piece_branch(const Gait& gait, double a, double b) {
    return rate_sign_of(gait.shape_at(0.5 * (a + b)).alpha_dot);
}

}  // namespace

// ---------------------------------------------------------------------------
// Simulation

SimResult simulate(const Gait& gait, const Model& model, const DragParams& params,
                   int steps_per_cycle, int cycles) {
    if (steps_per_cycle < 16)
        throw std::invalid_argument("simulate: steps_per_cycle must be at least 16");
    if (cycles < 1) throw std::invalid_argument("simulate: cycles must be at least 1");
    params.validate();
    gait.validate(params);

    const double T = gait.period();
    const std::vector<double> splits = cycle_splits(gait);

    SimResult result;
    result.trajectory.reserve(static_cast<std::size_t>(steps_per_cycle + 8) *
                                  static_cast<std::size_t>(cycles) + 1);

    std::array<double, 3> state{0.0, 0.0, 0.0};

    auto xi_at = [&](double t_abs, RateSign branch) {
        const ShapeState s = gait.shape_at(t_abs);
        return model.motility_at(s.alpha, branch, params).times(s.alpha_dot);
    };
    auto rate_of = [&](const Twist& xi, double theta) {
        const double c = std::cos(theta), s = std::sin(theta);
        return std::array<double, 3>{c * xi.x - s * xi.y, s * xi.x + c * xi.y, xi.theta};
    };
    auto push_sample = [&](double t_abs, RateSign branch) {
        const ShapeState s = gait.shape_at(t_abs);
        const Twist xi = model.motility_at(s.alpha, branch, params).times(s.alpha_dot);
        result.trajectory.push_back(
            {t_abs, Pose(state[0], state[1], state[2]), s.alpha, s.alpha_dot, xi});
    };

    push_sample(0.0, piece_branch(gait, splits[0], splits[1]));

    for (int cycle = 0; cycle < cycles; ++cycle) {
        const double t_base = static_cast<double>(cycle) * T;
        for (std::size_t j = 0; j + 1 < splits.size(); ++j) {
            const double a = splits[j], b = splits[j + 1];
            const double len = b - a;
            if (len <= 0.0) continue;
            const RateSign branch = piece_branch(gait, a, b);
            const int nsteps =
                std::max(1, static_cast<int>(std::lround(steps_per_cycle * len / T)));
            const double h = len / nsteps;
            for (int k = 0; k < nsteps; ++k) {
                const double t0 = t_base + a + k * h;
                const Twist xi1 = xi_at(t0, branch);
                const auto k1 = rate_of(xi1, state[2]);
                const Twist xi2 = xi_at(t0 + 0.5 * h, branch);
                const auto k2 = rate_of(xi2, state[2] + 0.5 * h * k1[2]);
                const auto k3 = rate_of(xi2, state[2] + 0.5 * h * k2[2]);
                const Twist xi4 = xi_at(t0 + h, branch);
                const auto k4 = rate_of(xi4, state[2] + h * k3[2]);
                for (int c = 0; c < 3; ++c)
                    state[c] += h / 6.0 * (k1[c] + 2.0 * (k2[c] + k3[c]) + k4[c]);
                push_sample(t0 + h, branch);
            }
        }
    }

    result.delta_g = Pose(state[0], state[1], state[2]);
    return result;
}

// ---------------------------------------------------------------------------
// Displacement prediction

namespace {

// Composite Simpson of the body-frame velocity over [a, b] with the branch
// held fixed (the caller guarantees the arc is smooth).
std::array<double, 3> simpson_motility_path(const Gait& gait, const Model& model,
                                            const DragParams& params, double a, double b,
                                            RateSign branch, int panels) {
    const int n = std::max(2, panels + (panels & 1));
    const double h = (b - a) / n;
    std::array<double, 3> acc{0.0, 0.0, 0.0};
    auto f = [&](double t) {
        const ShapeState s = gait.shape_at(t);
        return model.motility_at(s.alpha, branch, params).times(s.alpha_dot);
    };
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        const Twist v = f(a + i * h);
        acc[0] += w * v.x;
        acc[1] += w * v.y;
        acc[2] += w * v.theta;
    }
    for (auto& c : acc) c *= h / 3.0;
    return acc;
}

std::array<double, 3> simpson_branch_difference(const Model& model, const DragParams& params,
                                                double alpha_lo, double alpha_hi, int panels) {
    const int n = std::max(2, panels + (panels & 1));
    const double h = (alpha_hi - alpha_lo) / n;
    std::array<double, 3> acc{0.0, 0.0, 0.0};
    auto f = [&](double alpha) {
        const MotilityVector d = model.motility_at(alpha, RateSign::Plus, params) -
                                 model.motility_at(alpha, RateSign::Minus, params);
        return d;
    };
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        const MotilityVector v = f(alpha_lo + i * h);
        acc[0] += w * v.x;
        acc[1] += w * v.y;
        acc[2] += w * v.theta;
    }
    for (auto& c : acc) c *= h / 3.0;
    return acc;
}

}  // namespace

Prediction predict_displacement(const Gait& gait, const Model& model, const DragParams& params,
                                int panels_per_segment) {
    if (panels_per_segment < 2)
        throw std::invalid_argument("predict_displacement: need at least two panels");
    params.validate();
    gait.validate(params);

    const std::vector<double> splits = cycle_splits(gait);
    std::array<double, 3> acc{0.0, 0.0, 0.0};
    for (std::size_t j = 0; j + 1 < splits.size(); ++j) {
        const double a = splits[j], b = splits[j + 1];
        if (!(b - a > 0.0)) continue;
        const auto part = simpson_motility_path(gait, model, params, a, b,
                                                piece_branch(gait, a, b), panels_per_segment);
        for (int c = 0; c < 3; ++c) acc[c] += part[c];
    }
    const Twist dg_prime(acc[0], acc[1], acc[2]);
    return {dg_prime, exp_twist(dg_prime)};
}

Prediction predict_displacement_range(const Gait& gait, const Model& model,
                                      const DragParams& params, int panels) {
    if (panels < 2) throw std::invalid_argument("predict_displacement_range: need at least two panels");
    params.validate();
    gait.validate(params);

    const std::vector<double> roots = gait.rate_sign_changes();
    if (roots.empty()) {
        // A closed gait with no rate sign change is constant.
        return {Twist(), Pose()};
    }
    if (roots.size() != 2)
        throw GaitError("range-form prediction requires a gait covering each alpha at most twice; "
                        "use the path-integral form");

    const double a0 = gait.shape_at(roots[0]).alpha;
    const double a1 = gait.shape_at(roots[1]).alpha;
    const double lo = std::min(a0, a1);
    const double hi = std::max(a0, a1);

    std::array<double, 3> acc{0.0, 0.0, 0.0};
    // The branch difference has a kink at alpha = 0; integrate each side.
    if (lo < 0.0 && hi > 0.0) {
        const auto left = simpson_branch_difference(model, params, lo, 0.0, panels);
        const auto right = simpson_branch_difference(model, params, 0.0, hi, panels);
        for (int c = 0; c < 3; ++c) acc[c] = left[c] + right[c];
    } else {
        acc = simpson_branch_difference(model, params, lo, hi, panels);
    }
    const Twist dg_prime(acc[0], acc[1], acc[2]);
    return {dg_prime, exp_twist(dg_prime)};
}

DisplacementReport compare(const Gait& gait, const Model& model, const DragParams& params,
                           int steps_per_cycle, int cycles) {
    const SimResult sim = simulate(gait, model, params, steps_per_cycle, cycles);
    const Prediction one = predict_displacement(gait, model, params);

    DisplacementReport report;
    report.dg_sim = sim.delta_g;
    report.dg_prime = one.delta_g_prime.scaled_by(static_cast<double>(cycles));
    report.dg_pred = exp_twist(report.dg_prime);

    const double dx = sim.delta_g.x - report.dg_pred.x;
    const double dy = sim.delta_g.y - report.dg_pred.y;
    const double dth = sim.delta_g.theta - report.dg_pred.theta;
    report.abs_err = {std::abs(dx), std::abs(dy), std::abs(dth)};
    const double diff_norm = std::sqrt(dx * dx + dy * dy + dth * dth);
    const double sim_norm = std::sqrt(sim.delta_g.x * sim.delta_g.x +
                                      sim.delta_g.y * sim.delta_g.y +
                                      sim.delta_g.theta * sim.delta_g.theta);
    report.rel_err = diff_norm / std::max(sim_norm, 1e-12);
    return report;
}

}  // namespace scaleswim
