#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dustlink/attenuation.hpp"
#include "dustlink/linkbudget.hpp"
#include "dustlink/pathloss.hpp"
#include "dustlink/permittivity.hpp"

namespace dustlink::cli {

enum class SweepVariable { Visibility, ParticleRadius, Frequency, Distance, Humidity };
enum class Spacing { Linear, Log };

std::string_view to_string(SweepVariable v) noexcept;
std::string_view to_string(Spacing s) noexcept;

/// One swept axis. Units follow the variable: visibility km, particle
/// radius um, frequency GHz, distance m, humidity percent.
struct SweepAxis {
    SweepVariable variable = SweepVariable::Visibility;
    double min = 0.001;
    double max = 10.0;
    int steps = 41;
    Spacing spacing = Spacing::Log;

    /// Throws ConfigError.
    void validate() const;

    /// `steps` points from min to max inclusive; endpoints are exact.
    std::vector<double> points() const;
};

/// Visibility log over [1 m, 10 km]; particle radius linear over [0, 538 um];
/// frequency log over [1, 100] GHz; distance log over [10, 2000] m;
/// humidity linear over [0, 100] %.
SweepAxis default_sweep(SweepVariable variable);

struct Band {
    std::string name;
    double frequency_ghz;
    RadioConfig radio;
};

Band band_from_preset(std::string_view preset_name);

struct RunConfig {
    Band band = band_from_preset("dsrc-5.9");
    Scenario scenario;
    double shadowing_sigma_db = 0.0;
    double distance_m = 390.0;
    std::optional<double> frequency_ghz;  // defaults to the band frequency
    StormProfile storm = default_storm();
    HumidityModel permittivity;
    ModelOptions model;
    std::vector<double> humidity_list{0.0, 60.0, 100.0};
    SweepAxis sweep;
    std::uint64_t seed = 0;

    /// Worst case used by the threshold table: 1 m reference visibility and
    /// a 538 um equivalent radius.
    static StormProfile default_storm();

    LinkGeometry geometry() const { return {distance_m, frequency_ghz.value_or(band.frequency_ghz)}; }

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Strict JSON reader: unknown keys, wrong types and syntax errors raise
/// ConfigError with a field path or line/column.
RunConfig parse_run_config(std::string_view json_text);

/// Throws IoError if the file cannot be read, ConfigError if it is malformed.
RunConfig load_run_config(const std::filesystem::path& path);

/// Command-line overrides applied on top of a config file.
struct Overrides {
    std::optional<std::string> preset;
    std::optional<std::vector<double>> humidity;
    std::optional<double> distance_m;
    std::optional<double> visibility_km;
    std::optional<double> particle_um;
    std::optional<std::string> scenario;
    std::optional<std::uint64_t> seed;
    std::optional<double> size_unit_scale;
    std::optional<std::string> sweep_variable;
    std::optional<double> sweep_min;
    std::optional<double> sweep_max;
    std::optional<int> sweep_steps;
    std::optional<std::string> sweep_spacing;
};

/// Applies and re-validates. Throws ConfigError.
void apply_overrides(RunConfig& config, const Overrides& overrides);

} // namespace dustlink::cli
