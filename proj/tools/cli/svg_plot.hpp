#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "csv_table.hpp"

namespace dustlink::cli {

struct PlotOptions {
    /// Column for the horizontal axis. When unset, the first of
    /// visibility_km, particle_radius_um, frequency_ghz, humidity_pct that
    /// varies within a curve is used.
    std::optional<std::string> x_column;
    std::string y_column = "attenuation_db_per_km";
    /// Unset: log scale when the x values are positive and geometrically spaced.
    std::optional<bool> log_x;
    std::string title;
};

/// One polyline per humidity, in ascending humidity order. Every polyline
/// carries the CSV strings it was drawn from in `data-x` / `data-y`.
/// Throws IoError if the table has no rows or lacks a needed column.
std::string render_plot_svg(const CsvTable& table, const PlotOptions& options = {});

/// Reads a sweep CSV and writes an SVG file. Throws IoError.
void render_plot(const std::filesystem::path& csv_path, const std::filesystem::path& svg_path,
                 const PlotOptions& options = {});

} // namespace dustlink::cli
