#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace swimcli {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        if (!std::cout) throw OutputError("failed to write to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw OutputError("cannot open output file '" + path + "'");
    out << text;
    if (!out) throw OutputError("failed while writing '" + path + "'");
}

namespace {

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return fmt17(*d);
    return std::get<std::string>(c);
}

std::string json_cell(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return fmt17(*d);
    return "\"" + std::get<std::string>(c) + "\"";
}

}  // namespace

std::string render_csv(const Table& table) {
    std::ostringstream os;
    for (std::size_t i = 0; i < table.headers.size(); ++i)
        os << (i ? "," : "") << table.headers[i];
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
        os << "\n";
    }
    return os.str();
}

std::string render_json_rows(const Table& table) {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        os << "  {";
        for (std::size_t i = 0; i < table.rows[r].size(); ++i)
            os << (i ? ", " : "") << "\"" << table.headers[i] << "\": " << json_cell(table.rows[r][i]);
        os << "}" << (r + 1 < table.rows.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

std::string render_svg(const Table& table) {
    constexpr int W = 800, H = 500, M = 40;
    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                     "#8c564b", "#17becf", "#7f7f7f"};

    // Numeric columns only; first numeric column is the abscissa.
    std::vector<std::size_t> numeric;
    for (std::size_t c = 0; c < table.headers.size(); ++c) {
        bool ok = !table.rows.empty();
        for (const auto& row : table.rows)
            if (!std::holds_alternative<double>(row[c])) ok = false;
        if (ok) numeric.push_back(c);
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    if (numeric.size() >= 2) {
        const std::size_t xc = numeric.front();
        double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
        double ylo = xlo, yhi = -xlo;
        for (const auto& row : table.rows) {
            const double x = std::get<double>(row[xc]);
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
            for (std::size_t k = 1; k < numeric.size(); ++k) {
                const double y = std::get<double>(row[numeric[k]]);
                ylo = std::min(ylo, y);
                yhi = std::max(yhi, y);
            }
        }
        if (!(xhi > xlo)) xhi = xlo + 1.0;
        if (!(yhi > ylo)) yhi = ylo + 1.0;
        auto px = [&](double x) { return M + (W - 2 * M) * (x - xlo) / (xhi - xlo); };
        auto py = [&](double y) { return H - M - (H - 2 * M) * (y - ylo) / (yhi - ylo); };

        for (std::size_t k = 1; k < numeric.size(); ++k) {
            const std::size_t c = numeric[k];
            os << "  <polyline fill=\"none\" stroke=\"" << kPalette[(k - 1) % 8]
               << "\" stroke-width=\"1.5\" points=\"";
            for (const auto& row : table.rows) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.6g,%.6g ", px(std::get<double>(row[xc])),
                              py(std::get<double>(row[c])));
                os << buf;
            }
            os << "\"><title>" << table.headers[c] << "</title></polyline>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string svg_path_for(const std::string& out_path) {
    if (out_path == "-") return out_path;
    return out_path + ".svg";
}

}  // namespace swimcli
