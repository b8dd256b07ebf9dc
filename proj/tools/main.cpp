#include <CLI11.hpp>
#include <array>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "config.hpp"
#include "output.hpp"
#include "scaleswim/errors.hpp"
#include "scaleswim/gait.hpp"

using namespace scaleswim;

namespace swimcli {

namespace {

struct FlagValues {
    std::string config_path;
    std::optional<std::string> out, format, model, gait, method;
    std::optional<std::string> alpha_range, alphadot_range, grid_n;
    std::optional<int> steps, cycles;
    bool svg = false;
};

void add_common_options(CLI::App* sub, FlagValues& f) {
    sub->add_option("--config", f.config_path, "JSON config file; flags override file values");
    sub->add_option("--out", f.out, "output path ('-' for stdout)");
    sub->add_option("--format", f.format, "output format: csv|json");
    sub->add_option("--model", f.model, "motility model: ss|sr|rs|rr|scaled");
    sub->add_option("--gait", f.gait, "gait spec sin:<offset>,<amplitude>,<period>,<phase>");
    sub->add_option("--steps", f.steps, "integrator steps per cycle");
    sub->add_option("--cycles", f.cycles, "number of gait cycles");
    sub->add_option("--alpha-range", f.alpha_range, "alpha sweep range '<min>,<max>'");
    sub->add_option("--alphadot-range", f.alphadot_range, "alphadot sweep range '<min>,<max>'");
    sub->add_option("--grid-n", f.grid_n, "samples '<n_alpha>[,<n_alphadot>]'");
    sub->add_option("--method", f.method, "prediction quadrature: path|range");
    sub->add_flag("--svg", f.svg, "also emit a minimal SVG next to the output");
}

std::pair<double, double> parse_range(const std::string& text, const char* flag) {
    std::istringstream in(text);
    double lo, hi;
    char comma;
    if (!(in >> lo >> comma >> hi) || comma != ',')
        throw ConfigError(std::string(flag) + " expects '<min>,<max>'");
    return {lo, hi};
}

RunConfig build_config(const FlagValues& f) {
    RunConfig cfg;
    if (!f.config_path.empty()) load_config_file(f.config_path, cfg);
    if (f.out) cfg.out = *f.out;
    if (f.format) cfg.format = *f.format;
    if (f.model) cfg.model = *f.model;
    if (f.gait) cfg.gait = parse_gait_flag(*f.gait);
    if (f.method) cfg.method = *f.method;
    if (f.steps) cfg.steps = *f.steps;
    if (f.cycles) cfg.cycles = *f.cycles;
    if (f.svg) cfg.svg = true;
    if (f.alpha_range) {
        const auto [lo, hi] = parse_range(*f.alpha_range, "--alpha-range");
        cfg.alpha_min = lo;
        cfg.alpha_max = hi;
    }
    if (f.alphadot_range) {
        const auto [lo, hi] = parse_range(*f.alphadot_range, "--alphadot-range");
        cfg.alphadot_min = lo;
        cfg.alphadot_max = hi;
    }
    if (f.grid_n) {
        std::istringstream in(*f.grid_n);
        int na = 0;
        if (!(in >> na)) throw ConfigError("--grid-n expects '<n_alpha>[,<n_alphadot>]'");
        cfg.n_alpha = na;
        char comma;
        int nd = 0;
        if (in >> comma >> nd && comma == ',') cfg.n_alphadot = nd;
    }
    cfg.check();
    return cfg;
}

void emit_table(const RunConfig& cfg, const Table& table) {
    write_text(cfg.out, cfg.format == "csv" ? render_csv(table) : render_json_rows(table));
    if (cfg.svg) write_text(svg_path_for(cfg.out), render_svg(table));
}

std::string pose_json(const Pose& g) {
    return "{\"x\": " + fmt17(g.x) + ", \"y\": " + fmt17(g.y) + ", \"theta\": " + fmt17(g.theta) +
           "}";
}

std::string twist_json(const Twist& v) {
    return "{\"x\": " + fmt17(v.x) + ", \"y\": " + fmt17(v.y) + ", \"theta\": " + fmt17(v.theta) +
           "}";
}

std::string settings_json(const RunConfig& cfg, const char* command) {
    std::ostringstream os;
    os << "{\"command\": \"" << command << "\", \"model\": \"" << cfg.model << "\", \"gait\": \""
       << cfg.gait_echo() << "\", \"steps\": " << cfg.steps << ", \"cycles\": " << cfg.cycles
       << ", \"method\": \"" << cfg.method << "\", \"params\": {\"L\": " << fmt17(cfg.params.L)
       << ", \"c_lon\": " << fmt17(cfg.params.c_lon)
       << ", \"lat_ratio\": " << fmt17(cfg.params.lat_ratio)
       << ", \"rough_ratio\": " << fmt17(cfg.params.rough_ratio)
       << ", \"smooth_ratio\": " << fmt17(cfg.params.smooth_ratio)
       << ", \"domain_guard\": " << fmt17(cfg.params.alpha_max) << "}}";
    return os.str();
}

int cmd_motility(const RunConfig& cfg) {
    const auto alphas = cfg.alpha_grid(-3.0, 3.0, 401);
    Table table;
    table.headers = {"alpha",    "ass_x",    "ass_y",    "ass_th",   "asr_x",
                     "asr_y",    "asr_th",   "ars_x",    "ars_y",    "ars_th",
                     "aplus_x",  "aplus_y",  "aplus_th", "aminus_x", "aminus_y",
                     "aminus_th", "adiff_x", "adiff_y",  "adiff_th"};
    for (double a : alphas) {
        const MotilityVector ss = motility(a, Variant::SS(), cfg.params);
        const MotilityVector sr = motility(a, Variant::SR(), cfg.params);
        const MotilityVector rs = motility(a, Variant::RS(), cfg.params);
        const MotilityVector plus = scaled_motility(a, RateSign::Plus, cfg.params);
        const MotilityVector minus = scaled_motility(a, RateSign::Minus, cfg.params);
        const MotilityVector diff = motility_diff(a, cfg.params);
        table.rows.push_back({a, ss.x, ss.y, ss.theta, sr.x, sr.y, sr.theta, rs.x, rs.y, rs.theta,
                              plus.x, plus.y, plus.theta, minus.x, minus.y, minus.theta, diff.x,
                              diff.y, diff.theta});
    }
    emit_table(cfg, table);
    return 0;
}

int cmd_survey(const RunConfig& cfg) {
    const auto alphas = cfg.alpha_grid(-1.5, 1.5, 41);
    const auto rates = cfg.alphadot_grid(-1.5, 1.5, 41);
    const SurveyGrid grid = consistency_survey(alphas, rates, cfg.params);
    Table table;
    table.headers = {"alpha", "alphadot", "variant"};
    for (std::size_t ia = 0; ia < grid.alpha.size(); ++ia)
        for (std::size_t ir = 0; ir < grid.alpha_dot.size(); ++ir)
            table.rows.push_back({grid.alpha[ia], grid.alpha_dot[ir], to_string(grid.at(ia, ir))});
    emit_table(cfg, table);
    return 0;
}

Table trajectory_table(const Trajectory& trajectory) {
    Table table;
    table.headers = {"t", "x", "y", "theta", "alpha", "alphadot", "xix", "xiy", "xith"};
    for (const auto& s : trajectory)
        table.rows.push_back({s.t, s.g.x, s.g.y, s.g.theta, s.alpha, s.alpha_dot, s.xi.x, s.xi.y,
                              s.xi.theta});
    return table;
}

int cmd_simulate(const RunConfig& cfg) {
    const auto gait = cfg.make_gait();
    const SimResult sim = simulate(*gait, cfg.make_model(), cfg.params, cfg.steps, cfg.cycles);
    emit_table(cfg, trajectory_table(sim.trajectory));
    std::fprintf(stderr, "dg_sim = (%s, %s, %s) over %d cycle(s), %zu samples\n",
                 fmt17(sim.delta_g.x).c_str(), fmt17(sim.delta_g.y).c_str(),
                 fmt17(sim.delta_g.theta).c_str(), cfg.cycles, sim.trajectory.size());
    return 0;
}

int cmd_predict(const RunConfig& cfg) {
    const auto gait = cfg.make_gait();
    const Model model = cfg.make_model();
    const Prediction pred = (cfg.method == "range")
                                ? predict_displacement_range(*gait, model, cfg.params)
                                : predict_displacement(*gait, model, cfg.params);
    std::ostringstream os;
    os << "{\n  \"dgprime\": " << twist_json(pred.delta_g_prime)
       << ",\n  \"dg_pred\": " << pose_json(pred.delta_g)
       << ",\n  \"settings\": " << settings_json(cfg, "predict") << "\n}\n";
    write_text(cfg.out, os.str());
    return 0;
}

int cmd_compare(const RunConfig& cfg) {
    const auto gait = cfg.make_gait();
    const DisplacementReport rep =
        compare(*gait, cfg.make_model(), cfg.params, cfg.steps, cfg.cycles);
    std::ostringstream os;
    os << "{\n  \"dg_sim\": " << pose_json(rep.dg_sim)
       << ",\n  \"dgprime\": " << twist_json(rep.dg_prime)
       << ",\n  \"dg_pred\": " << pose_json(rep.dg_pred) << ",\n  \"abs_err\": {\"x\": "
       << fmt17(rep.abs_err[0]) << ", \"y\": " << fmt17(rep.abs_err[1])
       << ", \"theta\": " << fmt17(rep.abs_err[2]) << "},\n  \"rel_err\": " << fmt17(rep.rel_err)
       << ",\n  \"settings\": " << settings_json(cfg, "compare") << "\n}\n";
    write_text(cfg.out, os.str());
    return 0;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Two-link swimmer with scale-induced non-reversible longitudinal drag"};
    app.require_subcommand(1);

    FlagValues f;
    int which = 0;
    auto* motility_cmd = app.add_subcommand("motility", "sweep the motility functions over alpha");
    auto* survey_cmd = app.add_subcommand("survey", "variant-consistency survey over (alpha, alphadot)");
    auto* simulate_cmd = app.add_subcommand("simulate", "integrate a gait and write the trajectory");
    auto* predict_cmd = app.add_subcommand("predict", "displacement prediction from the motility difference");
    auto* compare_cmd = app.add_subcommand("compare", "simulate and predict side by side");
    motility_cmd->callback([&] { which = 1; });
    survey_cmd->callback([&] { which = 2; });
    simulate_cmd->callback([&] { which = 3; });
    predict_cmd->callback([&] { which = 4; });
    compare_cmd->callback([&] { which = 5; });
    for (auto* sub : {motility_cmd, survey_cmd, simulate_cmd, predict_cmd, compare_cmd})
        add_common_options(sub, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const RunConfig cfg = build_config(f);
        switch (which) {
            case 1: return cmd_motility(cfg);
            case 2: return cmd_survey(cfg);
            case 3: return cmd_simulate(cfg);
            case 4: return cmd_predict(cfg);
            case 5: return cmd_compare(cfg);
        }
        return 2;
    } catch (const OutputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const SingularConfigurationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {  // ConfigError, GaitError, bad values
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::logic_error& e) {  // internal model violations
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}

}  // namespace swimcli

int main(int argc, char** argv) { return swimcli::run(argc, argv); }
