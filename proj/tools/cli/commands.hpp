#pragma once

#include <iosfwd>
#include <vector>

#include "csv_table.hpp"
#include "dustlink/linkbudget.hpp"
#include "run_config.hpp"

namespace dustlink::cli {

/// Column order of the sweep and margin CSV output.
const std::vector<std::string>& sweep_columns();

/// Column order of the threshold table.
const std::vector<std::string>& threshold_columns();

/// Text written for a threshold the search bracket never reaches.
inline constexpr std::string_view kNoFailure = "no-failure";

/// One row per (humidity, sweep point), humidity-major. A humidity sweep
/// replaces the humidity list, giving one row per point.
CsvTable run_attenuation_sweep(const RunConfig& config);

struct MarginReport {
    double humidity_pct;
    ComplexPermittivity permittivity;
    double system_temperature_k;
    double noise_power_dbm;
    double max_allowed_excess_db;
    LinkReport link;
};

struct MarginResult {
    std::vector<MarginReport> reports;
    CsvTable csv;  // sweep schema, one row per humidity
};

/// Full chain at the configured operating point, once per humidity.
MarginResult run_margin_report(const RunConfig& config);

void print_margin_report(std::ostream& out, const RunConfig& config, const MarginResult& result);

/// Table of critical visibility and particle radius for both band presets,
/// both scenarios and every configured humidity (band, scenario, humidity
/// nesting). The radius search holds the storm's reference visibility; the
/// visibility search holds the storm's particle radius.
CsvTable run_threshold_table(const RunConfig& config);

} // namespace dustlink::cli
