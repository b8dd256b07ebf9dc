#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "scaleswim/gait.hpp"
#include "scaleswim/scaled.hpp"

namespace swimcli {

/// Invalid configuration: bad flag value, malformed config file, bad grid.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

struct SinSpec {
    double offset = 0.0;
    double amplitude = 0.8;
    double period = 1.0;
    double phase = 0.0;
};

struct WaypointSpec {
    std::vector<std::pair<double, double>> nodes;
};

using GaitSpec = std::variant<SinSpec, WaypointSpec>;

/// Everything a subcommand needs; flat JSON config file with the same keys,
/// command-line flags override file values.
struct RunConfig {
    scaleswim::DragParams params;

    std::optional<double> alpha_min, alpha_max;
    std::optional<int> n_alpha;
    std::optional<double> alphadot_min, alphadot_max;
    std::optional<int> n_alphadot;

    GaitSpec gait = SinSpec{};
    std::string model = "scaled";
    int steps = 4096;
    int cycles = 1;
    std::string out = "-";
    std::string format = "csv";
    bool svg = false;
    std::string method = "path";

    /// Human-readable echo of the gait, "sin:o,a,T,p" or "waypoints:n nodes".
    std::string gait_echo() const;

    std::unique_ptr<scaleswim::Gait> make_gait() const;
    scaleswim::Model make_model() const;

    /// Grid accessors with per-command defaults.
    std::vector<double> alpha_grid(double def_min, double def_max, int def_n) const;
    std::vector<double> alphadot_grid(double def_min, double def_max, int def_n) const;

    /// Throws ConfigError on out-of-range fields.
    void check() const;
};

/// Parse a JSON config file into `cfg`. Missing keys keep their defaults.
void load_config_file(const std::string& path, RunConfig& cfg);

/// Parse the --gait flag value ("sin:<offset>,<amplitude>,<period>,<phase>").
GaitSpec parse_gait_flag(const std::string& text);

std::vector<double> linspace(double lo, double hi, int n);

}  // namespace swimcli
