#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace swimcli {

/// I/O failure while writing results.
class OutputError : public std::runtime_error {
public:
    explicit OutputError(const std::string& what) : std::runtime_error(what) {}
};

/// Format a double with 17 significant digits (round-trip exact).
std::string fmt17(double v);

using Cell = std::variant<double, std::string>;

/// A rectangular result table; the first column is the abscissa for SVG.
struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<Cell>> rows;
};

/// Write `text` to `path`, or to stdout when path is "-".
void write_text(const std::string& path, const std::string& text);

std::string render_csv(const Table& table);
std::string render_json_rows(const Table& table);

/// Minimal static SVG: one polyline per numeric column against the first
/// column. Non-numeric columns are skipped.
std::string render_svg(const Table& table);

/// "<path>.svg", or "-" untouched.
std::string svg_path_for(const std::string& out_path);

}  // namespace swimcli
