#include "run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli_errors.hpp"
#include "dustlink/errors.hpp"

namespace dustlink::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message)
{
    throw ConfigError((path.empty() ? std::string("config") : path) + ": " + message);
}

void only_keys(const json& object, const std::string& path, std::initializer_list<std::string_view> allowed)
{
    if (!object.is_object()) {
        fail(path, "expected an object");
    }
    for (const auto& item : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            fail(path.empty() ? item.key() : path + "." + item.key(), "unknown key");
        }
    }
}

std::string join(const std::string& path, std::string_view key)
{
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

double number(const json& value, const std::string& path)
{
    if (!value.is_number()) {
        fail(path, "expected a number");
    }
    const double v = value.get<double>();
    if (!std::isfinite(v)) {
        fail(path, "must be finite");
    }
    return v;
}

void read_number(const json& object, const std::string& path, std::string_view key, double& target)
{
    if (const auto it = object.find(key); it != object.end()) {
        target = number(*it, join(path, key));
    }
}

std::string text(const json& value, const std::string& path)
{
    if (!value.is_string()) {
        fail(path, "expected a string");
    }
    return value.get<std::string>();
}

bool boolean(const json& value, const std::string& path)
{
    if (!value.is_boolean()) {
        fail(path, "expected true or false");
    }
    return value.get<bool>();
}

SweepVariable parse_sweep_variable(std::string_view name, const std::string& path)
{
    if (name == "visibility") return SweepVariable::Visibility;
    if (name == "particle_radius") return SweepVariable::ParticleRadius;
    if (name == "frequency") return SweepVariable::Frequency;
    if (name == "distance") return SweepVariable::Distance;
    if (name == "humidity") return SweepVariable::Humidity;
    fail(path, "unknown sweep variable '" + std::string(name) +
                   "' (expected visibility, particle_radius, frequency, distance or humidity)");
}

Spacing parse_spacing(std::string_view name, const std::string& path)
{
    if (name == "linear") return Spacing::Linear;
    if (name == "log") return Spacing::Log;
    fail(path, "unknown spacing '" + std::string(name) + "' (expected linear or log)");
}

Band parse_band(const json& value)
{
    if (value.is_string()) {
        try {
            return band_from_preset(value.get<std::string>());
        } catch (const InvalidInput& e) {
            fail("band", e.what());
        }
    }
    only_keys(value, "band",
              {"name", "preset", "frequency_ghz", "tx_gain_dbi", "rx_gain_dbi", "tx_power_dbm",
               "data_rate_bps", "circuit_loss_db", "noise_figure_db", "antenna_temperature_k",
               "required_ebn0_db", "margin_threshold_db"});
    Band band{"custom", 0.0, {}};
    if (const auto it = value.find("preset"); it != value.end()) {
        try {
            band = band_from_preset(text(*it, "band.preset"));
        } catch (const InvalidInput& e) {
            fail("band.preset", e.what());
        }
        band.name = "custom";
    } else {
        for (const char* key : {"frequency_ghz", "tx_gain_dbi", "rx_gain_dbi", "tx_power_dbm",
                                "data_rate_bps", "circuit_loss_db", "noise_figure_db",
                                "required_ebn0_db"}) {
            if (!value.contains(key)) {
                fail(join("band", key), "required when no preset is given");
            }
        }
    }
    if (const auto it = value.find("name"); it != value.end()) {
        band.name = text(*it, "band.name");
        if (band.name.empty() || band.name.find(',') != std::string::npos) {
            fail("band.name", "must be non-empty and contain no commas");
        }
    }
    read_number(value, "band", "frequency_ghz", band.frequency_ghz);
    auto& r = band.radio;
    read_number(value, "band", "tx_gain_dbi", r.tx_gain_dbi);
    read_number(value, "band", "rx_gain_dbi", r.rx_gain_dbi);
    read_number(value, "band", "tx_power_dbm", r.tx_power_dbm);
    read_number(value, "band", "data_rate_bps", r.data_rate_bps);
    read_number(value, "band", "circuit_loss_db", r.circuit_loss_db);
    read_number(value, "band", "noise_figure_db", r.noise_figure_db);
    read_number(value, "band", "antenna_temperature_k", r.antenna_temperature_k);
    read_number(value, "band", "required_ebn0_db", r.required_ebn0_db);
    read_number(value, "band", "margin_threshold_db", r.margin_threshold_db);
    return band;
}

void parse_scenario(const json& value, RunConfig& config)
{
    if (value.is_string()) {
        try {
            config.scenario.kind = parse_environment(value.get<std::string>());
        } catch (const InvalidInput& e) {
            fail("scenario", e.what());
        }
        return;
    }
    only_keys(value, "scenario", {"kind", "shadowing_db", "shadowing_sigma_db"});
    if (const auto it = value.find("kind"); it != value.end()) {
        try {
            config.scenario.kind = parse_environment(text(*it, "scenario.kind"));
        } catch (const InvalidInput& e) {
            fail("scenario.kind", e.what());
        }
    }
    read_number(value, "scenario", "shadowing_db", config.scenario.shadowing_db);
    read_number(value, "scenario", "shadowing_sigma_db", config.shadowing_sigma_db);
}

void parse_storm(const json& value, StormProfile& storm)
{
    only_keys(value, "storm",
              {"reference_visibility_km", "reference_height_m", "height_m", "particle_radius_um",
               "gamma", "b", "c_const", "g_const", "size_unit_scale"});
    read_number(value, "storm", "reference_visibility_km", storm.reference_visibility_km);
    read_number(value, "storm", "reference_height_m", storm.reference_height_m);
    read_number(value, "storm", "height_m", storm.height_m);
    if (const auto it = value.find("particle_radius_um"); it != value.end()) {
        storm.particle_radius_m = number(*it, "storm.particle_radius_um") * 1e-6;
    }
    read_number(value, "storm", "gamma", storm.gamma);
    read_number(value, "storm", "b", storm.b);
    read_number(value, "storm", "c_const", storm.c_const);
    read_number(value, "storm", "g_const", storm.g_const);
    read_number(value, "storm", "size_unit_scale", storm.size_unit_scale);
}

void parse_sweep(const json& value, SweepAxis& sweep)
{
    only_keys(value, "sweep", {"variable", "min", "max", "steps", "spacing"});
    if (const auto it = value.find("variable"); it != value.end()) {
        sweep = default_sweep(parse_sweep_variable(text(*it, "sweep.variable"), "sweep.variable"));
    }
    read_number(value, "sweep", "min", sweep.min);
    read_number(value, "sweep", "max", sweep.max);
    if (const auto it = value.find("steps"); it != value.end()) {
        if (!it->is_number_integer()) {
            fail("sweep.steps", "expected an integer");
        }
        sweep.steps = it->get<int>();
    }
    if (const auto it = value.find("spacing"); it != value.end()) {
        sweep.spacing = parse_spacing(text(*it, "sweep.spacing"), "sweep.spacing");
    }
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view source, std::size_t byte)
{
    byte = std::min(byte, source.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
        if (source[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

} // namespace

std::string_view to_string(SweepVariable v) noexcept
{
    switch (v) {
    case SweepVariable::Visibility: return "visibility";
    case SweepVariable::ParticleRadius: return "particle_radius";
    case SweepVariable::Frequency: return "frequency";
    case SweepVariable::Distance: return "distance";
    case SweepVariable::Humidity: return "humidity";
    }
    return "visibility";
}

std::string_view to_string(Spacing s) noexcept
{
    return s == Spacing::Log ? "log" : "linear";
}

void SweepAxis::validate() const
{
    if (steps < 2) {
        throw ConfigError("sweep.steps: must be at least 2");
    }
    if (!(std::isfinite(min) && std::isfinite(max) && min < max)) {
        throw ConfigError("sweep: min must be less than max");
    }
    if (spacing == Spacing::Log && min <= 0.0) {
        throw ConfigError("sweep.min: log spacing needs a positive minimum");
    }
    const bool needs_positive = variable == SweepVariable::Visibility ||
                                variable == SweepVariable::Frequency ||
                                variable == SweepVariable::Distance;
    if (needs_positive && min <= 0.0) {
        throw ConfigError("sweep.min: " + std::string(to_string(variable)) + " must be positive");
    }
    if ((variable == SweepVariable::ParticleRadius || variable == SweepVariable::Humidity) && min < 0.0) {
        throw ConfigError("sweep.min: " + std::string(to_string(variable)) + " must be non-negative");
    }
    if (variable == SweepVariable::Humidity && max > 100.0) {
        throw ConfigError("sweep.max: humidity must not exceed 100");
    }
}

std::vector<double> SweepAxis::points() const
{
    validate();
    std::vector<double> out(static_cast<std::size_t>(steps));
    const double last = steps - 1;
    for (int i = 0; i < steps; ++i) {
        const double t = i / last;
        if (spacing == Spacing::Log) {
            out[static_cast<std::size_t>(i)] =
                std::exp(std::log(min) + t * (std::log(max) - std::log(min)));
        } else {
            out[static_cast<std::size_t>(i)] = min + t * (max - min);
        }
    }
    out.front() = min;
    out.back() = max;
    return out;
}

SweepAxis default_sweep(SweepVariable variable)
{
    switch (variable) {
    case SweepVariable::Visibility: return {variable, 0.001, 10.0, 41, Spacing::Log};
    case SweepVariable::ParticleRadius: return {variable, 0.0, 538.0, 54, Spacing::Linear};
    case SweepVariable::Frequency: return {variable, 1.0, 100.0, 41, Spacing::Log};
    case SweepVariable::Distance: return {variable, 10.0, 2000.0, 41, Spacing::Log};
    case SweepVariable::Humidity: return {variable, 0.0, 100.0, 11, Spacing::Linear};
    }
    return {};
}

Band band_from_preset(std::string_view preset_name)
{
    const auto& preset = band_preset(preset_name);
    return {std::string(preset.name), preset.frequency_ghz, preset.radio};
}

StormProfile RunConfig::default_storm()
{
    StormProfile storm;
    storm.reference_visibility_km = 0.001;
    storm.particle_radius_m = 538e-6;
    return storm;
}

void RunConfig::validate() const
{
    auto check = [](const char* field, auto&& fn) {
        try {
            fn();
        } catch (const InvalidInput& e) {
            throw ConfigError(std::string(field) + ": " + e.what());
        }
    };
    check("band", [&] {
        band.radio.validate();
        detail::require_positive(band.frequency_ghz, "frequency");
    });
    check("scenario", [&] {
        detail::require_non_negative(scenario.shadowing_db, "shadowing");
        detail::require_non_negative(shadowing_sigma_db, "shadowing sigma");
    });
    check("geometry", [&] {
        detail::require_positive(distance_m, "distance");
        if (frequency_ghz) {
            detail::require_positive(*frequency_ghz, "frequency");
        }
    });
    check("storm", [&] { storm.validate(); });
    check("permittivity", [&] {
        // Both bases must give a valid permittivity over the humidity range.
        (void)permittivity.at(0.0);
        (void)permittivity.at(100.0);
    });
    if (humidity_list.empty()) {
        throw ConfigError("humidity_list: must contain at least one humidity");
    }
    for (double h : humidity_list) {
        if (!(std::isfinite(h) && h >= 0.0 && h <= 100.0)) {
            throw ConfigError("humidity_list: every humidity must lie in [0, 100]");
        }
    }
    sweep.validate();
}

RunConfig parse_run_config(std::string_view json_text)
{
    json root;
    try {
        root = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_and_column(json_text, e.byte);
        throw ConfigError("config syntax error at line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + e.what());
    }

    only_keys(root, "",
              {"band", "scenario", "geometry", "storm", "permittivity", "mie", "distance_mode",
               "humidity_list", "sweep", "seed"});

    RunConfig config;
    if (const auto it = root.find("band"); it != root.end()) {
        config.band = parse_band(*it);
    }
    if (const auto it = root.find("scenario"); it != root.end()) {
        parse_scenario(*it, config);
    }
    if (const auto it = root.find("geometry"); it != root.end()) {
        only_keys(*it, "geometry", {"distance_m", "frequency_ghz"});
        read_number(*it, "geometry", "distance_m", config.distance_m);
        if (const auto f = it->find("frequency_ghz"); f != it->end()) {
            config.frequency_ghz = number(*f, "geometry.frequency_ghz");
        }
    }
    if (const auto it = root.find("storm"); it != root.end()) {
        parse_storm(*it, config.storm);
    }
    if (const auto it = root.find("permittivity"); it != root.end()) {
        only_keys(*it, "permittivity", {"base_eps1", "base_eps2"});
        read_number(*it, "permittivity", "base_eps1", config.permittivity.base_eps1);
        read_number(*it, "permittivity", "base_eps2", config.permittivity.base_eps2);
    }
    if (const auto it = root.find("mie"); it != root.end()) {
        only_keys(*it, "mie", {"c2_literal", "c3_literal"});
        if (const auto f = it->find("c2_literal"); f != it->end()) {
            config.model.mie.c2_literal = boolean(*f, "mie.c2_literal");
        }
        if (const auto f = it->find("c3_literal"); f != it->end()) {
            config.model.mie.c3_literal = boolean(*f, "mie.c3_literal");
        }
    }
    if (const auto it = root.find("distance_mode"); it != root.end()) {
        try {
            config.model.distance_mode = parse_distance_mode(text(*it, "distance_mode"));
        } catch (const InvalidInput& e) {
            fail("distance_mode", e.what());
        }
    }
    if (const auto it = root.find("humidity_list"); it != root.end()) {
        if (!it->is_array()) {
            fail("humidity_list", "expected an array of numbers");
        }
        config.humidity_list.clear();
        for (std::size_t i = 0; i < it->size(); ++i) {
            config.humidity_list.push_back(number((*it)[i], "humidity_list[" + std::to_string(i) + "]"));
        }
    }
    if (const auto it = root.find("sweep"); it != root.end()) {
        parse_sweep(*it, config.sweep);
    }
    if (const auto it = root.find("seed"); it != root.end()) {
        if (!it->is_number_unsigned()) {
            fail("seed", "expected a non-negative integer");
        }
        config.seed = it->get<std::uint64_t>();
    }
    config.validate();
    return config;
}

RunConfig load_run_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_run_config(buffer.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

void apply_overrides(RunConfig& config, const Overrides& o)
{
    try {
        if (o.preset) {
            config.band = band_from_preset(*o.preset);
        }
        if (o.scenario) {
            config.scenario.kind = parse_environment(*o.scenario);
        }
    } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
    }
    if (o.humidity) {
        config.humidity_list = *o.humidity;
    }
    if (o.distance_m) {
        config.distance_m = *o.distance_m;
    }
    if (o.visibility_km) {
        config.storm.reference_visibility_km = *o.visibility_km;
    }
    if (o.particle_um) {
        config.storm.particle_radius_m = *o.particle_um * 1e-6;
    }
    if (o.seed) {
        config.seed = *o.seed;
    }
    if (o.size_unit_scale) {
        config.storm.size_unit_scale = *o.size_unit_scale;
    }
    if (o.sweep_variable) {
        config.sweep = default_sweep(parse_sweep_variable(*o.sweep_variable, "--sweep"));
    }
    if (o.sweep_min) {
        config.sweep.min = *o.sweep_min;
    }
    if (o.sweep_max) {
        config.sweep.max = *o.sweep_max;
    }
    if (o.sweep_steps) {
        config.sweep.steps = *o.sweep_steps;
    }
    if (o.sweep_spacing) {
        config.sweep.spacing = parse_spacing(*o.sweep_spacing, "--spacing");
    }
    config.validate();
}

} // namespace dustlink::cli
