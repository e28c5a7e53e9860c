#include "svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "cli_errors.hpp"

namespace dustlink::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 6> kColors{"#1f77b4", "#ff7f0e", "#2ca02c",
                                             "#d62728", "#9467bd", "#8c564b"};

struct Curve {
    std::vector<std::string> x_text;
    std::vector<std::string> y_text;
    std::vector<double> x;
    std::vector<double> y;
};

struct Axis {
    double lo;
    double hi;
    bool log;

    double map(double v, double pixel_lo, double pixel_hi) const
    {
        const double a = log ? std::log10(lo) : lo;
        const double b = log ? std::log10(hi) : hi;
        const double t = ((log ? std::log10(v) : v) - a) / (b - a);
        return pixel_lo + t * (pixel_hi - pixel_lo);
    }
};

bool varies(const std::vector<double>& values)
{
    return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) != values.end();
}

bool geometric(const std::vector<double>& values)
{
    if (values.size() < 3 || !std::all_of(values.begin(), values.end(), [](double v) { return v > 0.0; })) {
        return false;
    }
    const double ratio = values[1] / values[0];
    if (std::abs(ratio - 1.0) < 1e-12) {
        return false;
    }
    for (std::size_t i = 2; i < values.size(); ++i) {
        if (std::abs(values[i] / values[i - 1] - ratio) > 1e-6 * ratio) {
            return false;
        }
    }
    return true;
}

Axis make_axis(const std::map<double, Curve>& curves, bool use_x, bool log)
{
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const auto& [h, c] : curves) {
        for (double v : use_x ? c.x : c.y) {
            if (log && v <= 0.0) {
                continue;
            }
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (!std::isfinite(lo)) {
        lo = log ? 1.0 : 0.0;
        hi = log ? 10.0 : 1.0;
    }
    if (lo == hi) {
        const double pad = log ? 2.0 : (lo == 0.0 ? 1.0 : std::abs(lo) * 0.1);
        lo = log ? lo / pad : lo - pad;
        hi = log ? hi * pad : hi + pad;
    }
    return {lo, hi, log};
}

std::vector<double> ticks(const Axis& axis)
{
    std::vector<double> out;
    if (axis.log) {
        for (double e = std::floor(std::log10(axis.lo)); e <= std::ceil(std::log10(axis.hi)); ++e) {
            const double v = std::pow(10.0, e);
            if (v >= axis.lo * (1 - 1e-9) && v <= axis.hi * (1 + 1e-9)) {
                out.push_back(v);
            }
        }
        if (out.size() >= 2) {
            return out;
        }
        out.clear();
    }
    for (int i = 0; i <= 5; ++i) {
        out.push_back(axis.lo + (axis.hi - axis.lo) * i / 5.0);
    }
    return out;
}

std::string tick_label(double v)
{
    std::ostringstream s;
    s << std::setprecision(3) << v;
    return s.str();
}

std::string escape(std::string_view text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render_plot_svg(const CsvTable& table, const PlotOptions& options)
{
    if (table.rows.empty()) {
        throw IoError("csv has no data rows");
    }
    const auto humidity_col = table.column("humidity_pct");
    const auto y_col = table.column(options.y_column);

    auto collect = [&](std::size_t col) {
        std::map<double, std::vector<double>> by_humidity;
        for (const auto& row : table.rows) {
            by_humidity[parse_number(row[humidity_col])].push_back(parse_number(row[col]));
        }
        return by_humidity;
    };

    std::string x_name;
    if (options.x_column) {
        x_name = *options.x_column;
    } else {
        for (const char* candidate : {"visibility_km", "particle_radius_um", "frequency_ghz"}) {
            const auto grouped = collect(table.column(candidate));
            if (std::any_of(grouped.begin(), grouped.end(), [](const auto& g) { return varies(g.second); })) {
                x_name = candidate;
                break;
            }
        }
        if (x_name.empty()) {
            x_name = "humidity_pct";
        }
    }
    const auto x_col = table.column(x_name);

    std::map<double, Curve> curves;
    const bool humidity_is_x = x_col == humidity_col;
    for (const auto& row : table.rows) {
        auto& c = curves[humidity_is_x ? 0.0 : parse_number(row[humidity_col])];
        c.x_text.push_back(row[x_col]);
        c.y_text.push_back(row[y_col]);
        c.x.push_back(parse_number(row[x_col]));
        c.y.push_back(parse_number(row[y_col]));
    }

    const bool log_x = options.log_x.value_or(
        std::all_of(curves.begin(), curves.end(), [](const auto& c) { return geometric(c.second.x); }));
    const Axis xa = make_axis(curves, true, log_x);
    const Axis ya = make_axis(curves, false, false);

    const double px_lo = kLeft;
    const double px_hi = kWidth - kRight;
    const double py_lo = kHeight - kBottom;
    const double py_hi = kTop;

    std::ostringstream svg;
    svg << std::setprecision(6);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
        svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
            << escape(options.title) << "</text>\n";
    }
    svg << "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n"
        << "<line x1=\"" << px_lo << "\" y1=\"" << py_lo << "\" x2=\"" << px_hi << "\" y2=\"" << py_lo << "\"/>\n"
        << "<line x1=\"" << px_lo << "\" y1=\"" << py_lo << "\" x2=\"" << px_lo << "\" y2=\"" << py_hi << "\"/>\n"
        << "</g>\n";
    svg << "<g class=\"ticks\">\n";
    for (double t : ticks(xa)) {
        const double px = xa.map(t, px_lo, px_hi);
        svg << "<line x1=\"" << px << "\" y1=\"" << py_lo << "\" x2=\"" << px << "\" y2=\"" << py_lo + 5
            << "\" stroke=\"black\"/><text x=\"" << px << "\" y=\"" << py_lo + 18
            << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
    }
    for (double t : ticks(ya)) {
        const double py = ya.map(t, py_lo, py_hi);
        svg << "<line x1=\"" << px_lo - 5 << "\" y1=\"" << py << "\" x2=\"" << px_lo << "\" y2=\"" << py
            << "\" stroke=\"black\"/><text x=\"" << px_lo - 8 << "\" y=\"" << py + 4
            << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
    }
    svg << "</g>\n";
    svg << "<text class=\"xlabel\" x=\"" << (px_lo + px_hi) / 2 << "\" y=\"" << kHeight - 15
        << "\" text-anchor=\"middle\">" << escape(x_name) << (log_x ? " (log)" : "") << "</text>\n";
    svg << "<text class=\"ylabel\" transform=\"translate(18," << (py_lo + py_hi) / 2
        << ") rotate(-90)\" text-anchor=\"middle\">" << escape(options.y_column) << "</text>\n";

    std::size_t index = 0;
    for (const auto& [humidity, c] : curves) {
        const char* color = kColors[index % kColors.size()];
        const std::string label = humidity_is_x ? options.y_column : "H = " + tick_label(humidity) + "%";
        svg << "<polyline class=\"curve\" data-label=\"" << escape(label) << "\" data-x=\"";
        for (std::size_t i = 0; i < c.x_text.size(); ++i) {
            svg << (i ? " " : "") << c.x_text[i];
        }
        svg << "\" data-y=\"";
        for (std::size_t i = 0; i < c.y_text.size(); ++i) {
            svg << (i ? " " : "") << c.y_text[i];
        }
        svg << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            if (log_x && c.x[i] <= 0.0) {
                continue;
            }
            svg << (first ? "" : " ") << xa.map(c.x[i], px_lo, px_hi) << ',' << ya.map(c.y[i], py_lo, py_hi);
            first = false;
        }
        svg << "\"/>\n";
        const double ly = kTop + 20.0 * static_cast<double>(index);
        svg << "<line x1=\"" << px_hi + 15 << "\" y1=\"" << ly << "\" x2=\"" << px_hi + 40 << "\" y2=\"" << ly
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/><text class=\"legend\" x=\"" << px_hi + 45
            << "\" y=\"" << ly + 4 << "\">" << escape(label) << "</text>\n";
        ++index;
    }
    svg << "</svg>\n";
    return svg.str();
}

void render_plot(const std::filesystem::path& csv_path, const std::filesystem::path& svg_path,
                 const PlotOptions& options)
{
    std::ifstream in(csv_path);
    if (!in) {
        throw IoError("cannot read csv " + csv_path.string());
    }
    const auto table = CsvTable::read(in);
    const auto svg = render_plot_svg(table, options);
    std::ofstream out(svg_path, std::ios::binary);
    if (!out || !(out << svg)) {
        throw IoError("cannot write " + svg_path.string());
    }
}

} // namespace dustlink::cli
