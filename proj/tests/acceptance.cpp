// Acceptance suite: one pass/fail line per criterion, exit code = #failures.

#include <sys/wait.h>
#include <unistd.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "scaleswim/gait.hpp"

using namespace scaleswim;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int number, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] %2d. %s: %s\n", ok ? "PASS" : "FAIL", number, name, detail.c_str());
    if (!ok) ++g_failures;
}

double pose_err(const Pose& a, const Pose& b) {
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                     wrap_angle(a.theta - b.theta) * wrap_angle(a.theta - b.theta));
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// --- criterion 1 -----------------------------------------------------------

void criterion_scallop() {
    DragParams p;
    const Model ss = Model::fixed(Variant::SS());
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> amp(0.2, 1.2), off(-0.8, 0.8), period(0.5, 4.0),
        phase(0.0, 2.0 * M_PI), val(-1.0, 1.0);

    double worst = 0.0;
    int count = 0;
    for (int i = 0; i < 5; ++i) {
        double a = amp(rng), o = off(rng);
        while (std::abs(o) + a > p.alpha_max - 0.1) a *= 0.5;
        const SinusoidGait gait(o, a, period(rng), phase(rng));
        const Pose dg = simulate(gait, ss, p, 4096).delta_g;
        worst = std::max({worst, std::abs(dg.x), std::abs(dg.y), std::abs(dg.theta)});
        ++count;
    }
    for (int i = 0; i < 5; ++i) {
        const double T = period(rng);
        std::vector<double> ts{0.0};
        for (int k = 0; k < 3; ++k) ts.push_back(T * (0.1 + 0.8 * (k + val(rng) * 0.4 + 1.0) / 4.0));
        std::sort(ts.begin(), ts.end());
        const double a0 = val(rng);
        const WaypointGait gait(
            {{ts[0], a0}, {ts[1], val(rng)}, {ts[2], val(rng)}, {ts[3], val(rng)}, {T, a0}});
        const Pose dg = simulate(gait, ss, p, 4096).delta_g;
        worst = std::max({worst, std::abs(dg.x), std::abs(dg.y), std::abs(dg.theta)});
        ++count;
    }
    report(1, "scallop theorem (reversible model, 10 random closed gaits)", worst <= 1e-8,
           "max |dg component| = " + fmt(worst) + " over " + std::to_string(count) +
               " gaits (tol 1e-8)");
}

// --- criterion 2 -----------------------------------------------------------

void criterion_reversible_structure() {
    DragParams p;
    double max_x = 0.0, max_th = 0.0, peak = -1.0, peak_alpha = 0.0;
    bool all_negative = true;
    const int n = 401;
    for (int i = 0; i < n; ++i) {
        const double alpha = -p.alpha_max + 2.0 * p.alpha_max * i / (n - 1);
        const MotilityVector A = motility(alpha, Variant::SS(), p);
        max_x = std::max(max_x, std::abs(A.x));
        max_th = std::max(max_th, std::abs(A.theta));
        if (A.y >= 0.0) all_negative = false;
        if (std::abs(A.y) > peak) {
            peak = std::abs(A.y);
            peak_alpha = alpha;
        }
    }
    const bool zero_rows = max_x <= 1e-12 && max_th <= 1e-12;
    const bool interior = std::abs(peak_alpha) < p.alpha_max - 1e-9;
    // Regression constants recorded from the first oracle run (L = 1 defaults):
    // in this body frame |A_SS,y| = cos(alpha/2) / (2 + 2 cos^2(alpha/2)).
    const bool regression = std::abs(peak_alpha) <= 1e-12 && std::abs(peak - 0.25) <= 1e-12;
    const bool location = std::abs(peak_alpha) >= 0.5;

    const bool ok = zero_rows && all_negative && interior && regression && location;
    std::ostringstream os;
    os << "max|A_x| = " << fmt(max_x) << ", max|A_theta| = " << fmt(max_th)
       << ", A_y < 0 " << (all_negative ? "everywhere" : "VIOLATED")
       << "; |A_y| peaks at alpha = " << fmt(peak_alpha) << " (value " << fmt(peak)
       << ", regression " << (regression ? "ok" : "MOVED") << ")";
    if (!location)
        os << "; the |alpha*| >= 0.5 clause cannot hold in the joint-centered frame: here "
              "|A_SS,y| = cos(alpha/2) / (2 + 2 cos^2(alpha/2)) * L, which provably peaks at "
              "alpha = 0 (the L/4 value the force-split check pins); an interior peak near "
              "perpendicular only appears in a mass-centered frame";
    report(2, "reversible motility structure", ok, os.str());
}

// --- criterion 3 -----------------------------------------------------------

void criterion_oracle_equivalence() {
    DragParams p;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> adist(-2.9, 2.9), rdist(-2.0, 2.0);
    int checked = 0;
    int unique_strict = 0;
    double worst = 0.0;
    while (checked < 10000) {
        const double a = adist(rng), ad = rdist(rng);
        if (a == 0.0 || ad == 0.0) continue;
        ++checked;
        const auto strict = resolve_consistent_variants(a, ad, p).strict_entries();
        if (strict.size() == 1) {
            ++unique_strict;
            const MotilityVector A = scaled_motility(a, rate_sign_of(ad), p);
            worst = std::max({worst, std::abs(strict.front().xi.x / ad - A.x),
                              std::abs(strict.front().xi.y / ad - A.y),
                              std::abs(strict.front().xi.theta / ad - A.theta)});
        }
    }
    const bool ok = unique_strict == checked && worst <= 1e-12;
    report(3, "brute-force oracle equivalence (1e4 random states)", ok,
           std::to_string(unique_strict) + "/" + std::to_string(checked) +
               " uniquely strict, max |xi/rate - A| = " + fmt(worst) + " (tol 1e-12)");
}

// --- criterion 4 -----------------------------------------------------------

void criterion_quadrant_map() {
    DragParams p;
    std::vector<double> axis;
    for (int i = 0; i < 41; ++i) axis.push_back(-1.5 + 3.0 * i / 40.0);
    const SurveyGrid grid = consistency_survey(axis, axis, p);
    auto sgn = [](double v) { return (v > 0.0) - (v < 0.0); };

    int mismatches = 0, ss_rr_off_axes = 0;
    for (std::size_t ia = 0; ia < grid.alpha.size(); ++ia)
        for (std::size_t ir = 0; ir < grid.alpha_dot.size(); ++ir) {
            const Variant got = grid.at(ia, ir);
            const Variant want = sgn(grid.alpha[ia]) == sgn(grid.alpha_dot[ir]) ? Variant::SR()
                                                                                : Variant::RS();
            if (!(got == want)) ++mismatches;
            if (grid.alpha[ia] != 0.0 && grid.alpha_dot[ir] != 0.0 &&
                (got == Variant::SS() || got == Variant::RR()))
                ++ss_rr_off_axes;
        }
    report(4, "quadrant map on the 41x41 survey", mismatches == 0 && ss_rr_off_axes == 0,
           std::to_string(mismatches) + " label mismatches, " + std::to_string(ss_rr_off_axes) +
               " SS/RR cells off the axes");
}

// --- criterion 5 -----------------------------------------------------------

void criterion_symmetries() {
    DragParams p;
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double a = -p.alpha_max + 2.0 * p.alpha_max * i / 400.0;
        const MotilityVector plus = scaled_motility(a, RateSign::Plus, p);
        const MotilityVector minus = scaled_motility(a, RateSign::Minus, p);
        const MotilityVector mirrored = scaled_motility(-a, RateSign::Plus, p);
        const MotilityVector diff = motility_diff(a, p);
        worst = std::max({worst, std::abs(minus.x + plus.x), std::abs(minus.y - plus.y),
                          std::abs(minus.theta + plus.theta), std::abs(mirrored.x - plus.x),
                          std::abs(mirrored.y - plus.y), std::abs(mirrored.theta + plus.theta),
                          std::abs(diff.y)});
    }
    report(5, "branch reflection, parity, and vanishing lateral difference", worst <= 1e-12,
           "max residual = " + fmt(worst) + " over 401 samples (tol 1e-12)");
}

// --- criterion 6 -----------------------------------------------------------

void criterion_forward_progress() {
    DragParams p;
    double min_progress = 0.0;
    for (int i = 0; i <= 40; ++i) {
        const double a = -1.5 + 3.0 * i / 40.0;
        for (int j = 0; j <= 40; ++j) {
            const double ad = -1.5 + 3.0 * j / 40.0;
            const MotilityVector A = scaled_motility(a, rate_sign_of(ad), p);
            min_progress = std::min(min_progress, A.x * ad);
        }
    }
    const Pose centered = simulate(SinusoidGait(0.0, 0.8, 1.0), Model::scaled(), p).delta_g;
    const Pose offset = simulate(SinusoidGait(0.4, 0.4, 1.0), Model::scaled(), p).delta_g;
    const bool ok = min_progress >= -1e-12 && centered.x > 0.0 &&
                    std::abs(centered.theta) <= 1e-8 && offset.x > 0.0 && offset.theta > 0.0;
    report(6, "forward progress in every quadrant and over gaits", ok,
           "min A_x(alpha, sign rate) * rate = " + fmt(min_progress) + "; centered gait dx = " +
               fmt(centered.x) + ", |dtheta| = " + fmt(std::abs(centered.theta)) +
               "; offset gait dx = " + fmt(offset.x) + ", dtheta = " + fmt(offset.theta));
}

// --- criterion 7 -----------------------------------------------------------

void criterion_prediction_convergence() {
    DragParams p;
    std::vector<double> errs;
    for (double a : {0.8, 0.4, 0.2, 0.1})
        errs.push_back(compare(SinusoidGait(0.0, a, 1.0), Model::scaled(), p).rel_err);
    bool ok = true;
    for (std::size_t i = 1; i < errs.size(); ++i)
        ok = ok && errs[i] < errs[i - 1] && errs[i] <= 0.75 * errs[i - 1];
    std::ostringstream os;
    os << "rel_err(a = 0.8, 0.4, 0.2, 0.1) = ";
    for (double e : errs) os << fmt(e) << " ";
    os << "(each <= 0.75x the previous)";
    report(7, "prediction converges as the gait shrinks", ok, os.str());
}

// --- criterion 8 -----------------------------------------------------------

void criterion_kinematic_ground_truth() {
    DragParams p;
    double worst_jac = 0.0;
    const double h = 1e-6;
    for (int link : {1, 2})
        for (double alpha : {-2.6, -1.1, 0.0, 0.7, 2.3}) {
            const auto J = link_jacobian(link, alpha, p);
            // Central finite differences of the link pose under perturbed (g, alpha).
            const LinkConfiguration cfg = link_configurations(alpha, p);
            const Pose base = (link == 1) ? cfg.front : cfg.rear;
            const Eigen::Matrix2d Rt =
                Eigen::Rotation2Dd(base.theta).toRotationMatrix().transpose();
            Eigen::Matrix<double, 3, 4> Jfd;
            for (int k = 0; k < 3; ++k) {
                Twist plus_t, minus_t;
                (k == 0 ? plus_t.x : k == 1 ? plus_t.y : plus_t.theta) = h;
                (k == 0 ? minus_t.x : k == 1 ? minus_t.y : minus_t.theta) = -h;
                const Pose gp = compose(exp_twist(plus_t), base);
                const Pose gm = compose(exp_twist(minus_t), base);
                const Eigen::Vector2d d = Rt * Eigen::Vector2d(gp.x - gm.x, gp.y - gm.y) / (2 * h);
                Jfd(0, k) = d(0);
                Jfd(1, k) = d(1);
                Jfd(2, k) = wrap_angle(gp.theta - gm.theta) / (2 * h);
            }
            const LinkConfiguration up = link_configurations(alpha + h, p);
            const LinkConfiguration dn = link_configurations(alpha - h, p);
            const Pose ap = (link == 1) ? up.front : up.rear;
            const Pose am = (link == 1) ? dn.front : dn.rear;
            const Eigen::Vector2d d = Rt * Eigen::Vector2d(ap.x - am.x, ap.y - am.y) / (2 * h);
            Jfd(0, 3) = d(0);
            Jfd(1, 3) = d(1);
            Jfd(2, 3) = wrap_angle(ap.theta - am.theta) / (2 * h);
            worst_jac = std::max(worst_jac, (J - Jfd).cwiseAbs().maxCoeff());
        }

    const Pose arc = exp_twist(Twist(1.0, 0.0, M_PI_2));
    const double arc_err = pose_err(arc, Pose(2.0 / M_PI, 2.0 / M_PI, M_PI_2));

    const ForceSplit fs = force_split(0.0, Variant::SS(), p);
    const double fg_err =
        (fs.F_g - Eigen::Matrix3d(Eigen::Vector3d(-2.0, -4.0, -4.0 / 3.0).asDiagonal()))
            .cwiseAbs()
            .maxCoeff();
    const double fa_err = (fs.F_alpha - Eigen::Vector3d(0.0, -1.0, 0.0)).cwiseAbs().maxCoeff();

    const bool ok = worst_jac <= 1e-6 && arc_err <= 1e-9 && fg_err <= 1e-12 && fa_err <= 1e-12;
    report(8, "kinematic ground truth (Jacobians, exponential arc, force split)", ok,
           "max |J - J_fd| = " + fmt(worst_jac) + ", arc error = " + fmt(arc_err) +
               ", force-split error = " + fmt(std::max(fg_err, fa_err)));
}

// --- criterion 9 -----------------------------------------------------------

void criterion_invariances() {
    DragParams p;
    double scale_resid = 0.0;
    for (double k : {0.5, 3.7, 1000.0}) {
        DragParams scaled = p;
        scaled.c_lon = p.c_lon * k;
        for (int i = 0; i <= 40; ++i) {
            const double a = -2.9 + 5.8 * i / 40.0;
            for (RateSign s : {RateSign::Plus, RateSign::Minus}) {
                const MotilityVector u = scaled_motility(a, s, p);
                const MotilityVector v = scaled_motility(a, s, scaled);
                scale_resid = std::max({scale_resid, std::abs(u.x - v.x), std::abs(u.y - v.y),
                                        std::abs(u.theta - v.theta)});
            }
        }
    }

    const Pose fast = simulate(SinusoidGait(0.0, 0.8, 1.0), Model::scaled(), p).delta_g;
    const Pose slow = simulate(SinusoidGait(0.0, 0.8, 10.0), Model::scaled(), p).delta_g;
    const double rate_resid = pose_err(fast, slow);

    const Pose ref = simulate(SinusoidGait(0.0, 0.8, 1.0), Model::scaled(), p, 1 << 16).delta_g;
    double prev = 0.0, min_ratio = 1e9;
    for (int n : {128, 256, 512}) {
        const double err =
            pose_err(simulate(SinusoidGait(0.0, 0.8, 1.0), Model::scaled(), p, n).delta_g, ref);
        if (prev > 0.0) min_ratio = std::min(min_ratio, prev / err);
        prev = err;
    }

    const bool ok = scale_resid <= 1e-12 && rate_resid <= 1e-8 && min_ratio >= 8.0;
    report(9, "model invariances (drag scale, rate independence, integrator order)", ok,
           "drag-scale residual = " + fmt(scale_resid) + ", reparameterization residual = " +
               fmt(rate_resid) + ", error ratio per step halving >= " + fmt(min_ratio));
}

// --- criterion 10 ----------------------------------------------------------

void criterion_cli_determinism() {
    const fs::path dir =
        fs::temp_directory_path() / ("scaleswim-acceptance-" + std::to_string(getpid()));
    fs::create_directories(dir);
    auto run = [&](const std::string& args) {
        const std::string cmd =
            std::string("\"") + SCALESWIM_CLI_PATH + "\" " + args + " >/dev/null 2>/dev/null";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    auto slurp = [](const fs::path& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };

    const fs::path a = dir / "a.json", b = dir / "b.json";
    const fs::path ca = dir / "a.csv", cb = dir / "b.csv";
    bool ok = run("compare --gait sin:0,0.8,1,0 --steps 2048 --out \"" + a.string() + "\"") == 0;
    ok = ok && run("compare --gait sin:0,0.8,1,0 --steps 2048 --out \"" + b.string() + "\"") == 0;
    ok = ok && run("motility --grid-n 201 --out \"" + ca.string() + "\"") == 0;
    ok = ok && run("motility --grid-n 201 --out \"" + cb.string() + "\"") == 0;
    const bool identical = ok && slurp(a) == slurp(b) && slurp(ca) == slurp(cb) && !slurp(a).empty();
    report(10, "CLI determinism (byte-identical repeated runs)", identical,
           ok ? (identical ? "compare JSON and motility CSV identical across runs"
                           : "outputs differ between runs")
              : "CLI runs failed");
}

}  // namespace

int main() {
    std::printf("acceptance suite\n----------------\n");
    criterion_scallop();
    criterion_reversible_structure();
    criterion_oracle_equivalence();
    criterion_quadrant_map();
    criterion_symmetries();
    criterion_forward_progress();
    criterion_prediction_convergence();
    criterion_kinematic_ground_truth();
    criterion_invariances();
    criterion_cli_determinism();
    std::printf("----------------\n%d criterion(s) failed\n", g_failures);
    return g_failures;
}
