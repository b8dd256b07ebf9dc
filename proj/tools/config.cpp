#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scaleswim/errors.hpp"

namespace swimcli {

using nlohmann::json;
using namespace scaleswim;

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < n; ++i)
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
}

std::string RunConfig::gait_echo() const {
    std::ostringstream os;
    if (const auto* s = std::get_if<SinSpec>(&gait)) {
        os << "sin:" << s->offset << "," << s->amplitude << "," << s->period << "," << s->phase;
    } else {
        os << "waypoints:" << std::get<WaypointSpec>(gait).nodes.size() << " nodes";
    }
    return os.str();
}

std::unique_ptr<Gait> RunConfig::make_gait() const {
    try {
        if (const auto* s = std::get_if<SinSpec>(&gait))
            return std::make_unique<SinusoidGait>(s->offset, s->amplitude, s->period, s->phase);
        return std::make_unique<WaypointGait>(std::get<WaypointSpec>(gait).nodes);
    } catch (const GaitError& e) {
        throw ConfigError(std::string("invalid gait: ") + e.what());
    }
}

Model RunConfig::make_model() const {
    if (model == "scaled") return Model::scaled();
    if (model == "ss") return Model::fixed(Variant::SS());
    if (model == "sr") return Model::fixed(Variant::SR());
    if (model == "rs") return Model::fixed(Variant::RS());
    if (model == "rr") return Model::fixed(Variant::RR());
    throw ConfigError("unknown model '" + model + "' (expected ss|sr|rs|rr|scaled)");
}

std::vector<double> RunConfig::alpha_grid(double def_min, double def_max, int def_n) const {
    const double lo = alpha_min.value_or(def_min);
    const double hi = alpha_max.value_or(def_max);
    const int n = n_alpha.value_or(def_n);
    if (n < 1) throw ConfigError("n_alpha must be >= 1");
    if (!(lo <= hi)) throw ConfigError("alpha range must have min <= max");
    if (std::max(std::abs(lo), std::abs(hi)) > params.alpha_max)
        throw ConfigError("alpha range exceeds the shape domain guard");
    return linspace(lo, hi, n);
}

std::vector<double> RunConfig::alphadot_grid(double def_min, double def_max, int def_n) const {
    const double lo = alphadot_min.value_or(def_min);
    const double hi = alphadot_max.value_or(def_max);
    const int n = n_alphadot.value_or(def_n);
    if (n < 1) throw ConfigError("n_alphadot must be >= 1");
    if (!(lo <= hi)) throw ConfigError("alphadot range must have min <= max");
    return linspace(lo, hi, n);
}

void RunConfig::check() const {
    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (steps < 16) throw ConfigError("steps must be >= 16");
    if (cycles < 1) throw ConfigError("cycles must be >= 1");
    if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
    if (method != "path" && method != "range") throw ConfigError("method must be path or range");
}

GaitSpec parse_gait_flag(const std::string& text) {
    if (text.rfind("sin:", 0) != 0)
        throw ConfigError("gait flag must look like sin:<offset>,<amplitude>,<period>,<phase>");
    std::istringstream in(text.substr(4));
    SinSpec s;
    char c1, c2, c3;
    if (!(in >> s.offset >> c1 >> s.amplitude >> c2 >> s.period >> c3 >> s.phase) || c1 != ',' ||
        c2 != ',' || c3 != ',')
        throw ConfigError("could not parse gait '" + text + "'");
    return s;
}

namespace {

GaitSpec parse_gait_json(const json& j) {
    if (j.is_string()) return parse_gait_flag(j.get<std::string>());
    if (!j.is_object()) throw ConfigError("gait must be a string or an object");
    const std::string type = j.value("type", "sin");
    if (type == "sin") {
        SinSpec s;
        s.offset = j.value("offset", s.offset);
        s.amplitude = j.value("amplitude", s.amplitude);
        s.period = j.value("period", s.period);
        s.phase = j.value("phase", s.phase);
        return s;
    }
    if (type == "waypoints") {
        if (!j.contains("nodes") || !j["nodes"].is_array())
            throw ConfigError("waypoint gait needs a 'nodes' array of [t, alpha] pairs");
        WaypointSpec w;
        for (const auto& node : j["nodes"]) {
            if (!node.is_array() || node.size() != 2)
                throw ConfigError("each waypoint node must be a [t, alpha] pair");
            w.nodes.emplace_back(node[0].get<double>(), node[1].get<double>());
        }
        return w;
    }
    throw ConfigError("unknown gait type '" + type + "'");
}

}  // namespace

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");

    auto num = [&](const char* key, double& target) {
        if (j.contains(key)) target = j.at(key).get<double>();
    };
    auto opt_num = [&](const char* key, std::optional<double>& target) {
        if (j.contains(key)) target = j.at(key).get<double>();
    };
    auto opt_int = [&](const char* key, std::optional<int>& target) {
        if (j.contains(key)) target = j.at(key).get<int>();
    };

    num("L", cfg.params.L);
    num("c_lon", cfg.params.c_lon);
    num("lat_ratio", cfg.params.lat_ratio);
    num("rough_ratio", cfg.params.rough_ratio);
    num("smooth_ratio", cfg.params.smooth_ratio);
    num("domain_guard", cfg.params.alpha_max);

    opt_num("alpha_min", cfg.alpha_min);
    opt_num("alpha_max", cfg.alpha_max);
    opt_int("n_alpha", cfg.n_alpha);
    opt_num("alphadot_min", cfg.alphadot_min);
    opt_num("alphadot_max", cfg.alphadot_max);
    opt_int("n_alphadot", cfg.n_alphadot);

    if (j.contains("gait")) cfg.gait = parse_gait_json(j.at("gait"));
    if (j.contains("model")) cfg.model = j.at("model").get<std::string>();
    if (j.contains("steps")) cfg.steps = j.at("steps").get<int>();
    if (j.contains("cycles")) cfg.cycles = j.at("cycles").get<int>();
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
    if (j.contains("svg")) cfg.svg = j.at("svg").get<bool>();
    if (j.contains("method")) cfg.method = j.at("method").get<std::string>();
}

}  // namespace swimcli
