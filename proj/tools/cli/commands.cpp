#include "commands.hpp"

#include <iomanip>
#include <ostream>
#include <random>

#include "cli_errors.hpp"
#include "dustlink/errors.hpp"

namespace dustlink::cli {

namespace {

struct OperatingPoint {
    double humidity_pct;
    double visibility_km;
    double particle_radius_um;
    double distance_m;
    double frequency_ghz;
};

std::vector<std::string> sweep_row(const RunConfig& config, const OperatingPoint& p,
                                   const StormProfile& storm, const LinkReport& link)
{
    return {config.band.name,
            std::string(to_string(config.scenario.kind)),
            format_number(p.humidity_pct),
            format_number(storm.height_m),
            format_number(visibility_at_height(storm)),
            format_number(p.particle_radius_um),
            format_number(p.frequency_ghz),
            format_number(link.dust_attenuation_db_per_km),
            format_number(link.baseline_loss_db),
            format_number(link.modified_loss_db),
            format_number(link.margin_db),
            link.link_ok ? "true" : "false"};
}

StormProfile storm_at(const RunConfig& config, const OperatingPoint& p)
{
    StormProfile storm = config.storm;
    storm.humidity_pct = p.humidity_pct;
    storm.reference_visibility_km = p.visibility_km;
    storm.particle_radius_m = p.particle_radius_um * 1e-6;
    return storm;
}

OperatingPoint base_point(const RunConfig& config, double humidity_pct)
{
    const auto geom = config.geometry();
    return {humidity_pct, config.storm.reference_visibility_km, config.storm.particle_radius_m * 1e6,
            geom.distance_m, geom.frequency_ghz};
}

std::string threshold_text(const Threshold& t, double unit_factor)
{
    if (t.no_failure()) {
        return std::string(kNoFailure);
    }
    return format_number(t.value * unit_factor);
}

template <class Fn>
auto rethrow_as_config(Fn&& fn)
{
    try {
        return fn();
    } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
    }
}

} // namespace

const std::vector<std::string>& sweep_columns()
{
    static const std::vector<std::string> columns{
        "band",           "scenario",          "humidity_pct",          "height_m",
        "visibility_km",  "particle_radius_um", "frequency_ghz",         "attenuation_db_per_km",
        "baseline_loss_db", "modified_loss_db", "margin_db",             "link_ok"};
    return columns;
}

const std::vector<std::string>& threshold_columns()
{
    static const std::vector<std::string> columns{"band", "scenario", "humidity_pct",
                                                  "critical_visibility_km",
                                                  "critical_particle_radius_um"};
    return columns;
}

CsvTable run_attenuation_sweep(const RunConfig& config)
{
    config.validate();
    const auto values = config.sweep.points();
    const bool humidity_sweep = config.sweep.variable == SweepVariable::Humidity;
    const std::vector<double> humidities = humidity_sweep ? std::vector<double>{0.0} : config.humidity_list;

    std::mt19937_64 rng(config.seed);
    const LogNormalShadowing shadowing(config.shadowing_sigma_db);

    CsvTable table;
    table.header = sweep_columns();
    table.rows.reserve(humidities.size() * values.size());

    rethrow_as_config([&] {
        for (double humidity : humidities) {
            for (double value : values) {
                OperatingPoint p = base_point(config, humidity);
                switch (config.sweep.variable) {
                case SweepVariable::Visibility: p.visibility_km = value; break;
                case SweepVariable::ParticleRadius: p.particle_radius_um = value; break;
                case SweepVariable::Frequency: p.frequency_ghz = value; break;
                case SweepVariable::Distance: p.distance_m = value; break;
                case SweepVariable::Humidity: p.humidity_pct = value; break;
                }
                const auto storm = storm_at(config, p);
                const auto eps = config.permittivity.at(p.humidity_pct);
                const LinkGeometry geom{p.distance_m, p.frequency_ghz};
                const auto link = evaluate_link(config.band.radio, config.scenario, geom, storm, eps,
                                                config.model, shadowing.draw(rng));
                table.rows.push_back(sweep_row(config, p, storm, link));
            }
        }
        return 0;
    });
    return table;
}

MarginResult run_margin_report(const RunConfig& config)
{
    config.validate();
    std::mt19937_64 rng(config.seed);
    const LogNormalShadowing shadowing(config.shadowing_sigma_db);

    MarginResult result{{}, {sweep_columns(), {}}};
    rethrow_as_config([&] {
        const auto geom = config.geometry();
        for (double humidity : config.humidity_list) {
            const OperatingPoint p = base_point(config, humidity);
            const auto storm = storm_at(config, p);
            const auto eps = config.permittivity.at(humidity);
            const auto link = evaluate_link(config.band.radio, config.scenario, geom, storm, eps,
                                            config.model, shadowing.draw(rng));
            result.reports.push_back({humidity, eps, system_noise_temperature(config.band.radio),
                                      noise_power_dbm(config.band.radio),
                                      max_allowed_excess_loss(config.band.radio, config.scenario, geom),
                                      link});
            result.csv.rows.push_back(sweep_row(config, p, storm, link));
        }
        return 0;
    });
    return result;
}

void print_margin_report(std::ostream& out, const RunConfig& config, const MarginResult& result)
{
    const auto geom = config.geometry();
    const auto& radio = config.band.radio;
    const auto flags = out.flags();
    out << std::fixed << std::setprecision(2);
    out << "band            " << config.band.name << " (" << geom.frequency_ghz << " GHz)\n"
        << "scenario        " << to_string(config.scenario.kind) << ", d = " << geom.distance_m
        << " m, shadowing " << config.scenario.shadowing_db << " dB\n"
        << "EIRP            " << radio.eirp_dbm() << " dBm\n"
        << "rx gain         " << radio.rx_gain_dbi << " dBi\n"
        << "data rate       " << radio.data_rate_bps / 1e6 << " Mb/s\n"
        << "storm           V0 = " << config.storm.reference_visibility_km * 1000.0
        << " m at h0 = " << config.storm.reference_height_m << " m, h = " << config.storm.height_m
        << " m, a_e = " << config.storm.particle_radius_m * 1e6 << " um\n";
    for (const auto& r : result.reports) {
        out << "\nhumidity " << r.humidity_pct << " %\n"
            << std::setprecision(4) << "  permittivity      " << r.permittivity.eps1() << " - j"
            << r.permittivity.eps2() << '\n'
            << std::setprecision(2) << "  T_s               " << r.system_temperature_k << " K\n"
            << "  noise power       " << r.noise_power_dbm << " dBm\n"
            << std::setprecision(6) << "  attenuation       " << r.link.dust_attenuation_db_per_km
            << " dB/km\n"
            << "  dust excess       " << r.link.dust_excess_db << " dB\n"
            << std::setprecision(2) << "  baseline loss     " << r.link.baseline_loss_db << " dB\n"
            << "  modified loss     " << r.link.modified_loss_db << " dB\n"
            << "  allowed excess    " << r.max_allowed_excess_db << " dB\n"
            << "  margin            " << r.link.margin_db << " dB (threshold "
            << radio.margin_threshold_db << " dB)\n"
            << "  link              " << (r.link.link_ok ? "OK" : "FAIL") << '\n';
    }
    out.flags(flags);
}

CsvTable run_threshold_table(const RunConfig& config)
{
    config.validate();
    CsvTable table;
    table.header = threshold_columns();

    rethrow_as_config([&] {
        for (const auto& preset : band_presets()) {
            const LinkGeometry geom{config.distance_m, preset.frequency_ghz};
            for (const auto env : {Environment::Urban, Environment::Highway}) {
                const Scenario scenario{env, config.scenario.shadowing_db};
                for (double humidity : config.humidity_list) {
                    StormProfile storm = config.storm;
                    storm.humidity_pct = humidity;
                    const auto eps = config.permittivity.at(humidity);
                    const auto visibility =
                        threshold_visibility(preset.radio, scenario, geom, storm, eps, config.model);
                    const auto radius =
                        threshold_particle_radius(preset.radio, scenario, geom, storm, eps, config.model);
                    table.rows.push_back({std::string(preset.name), std::string(to_string(env)),
                                          format_number(humidity), threshold_text(visibility, 1.0),
                                          threshold_text(radius, 1e6)});
                }
            }
        }
        return 0;
    });
    return table;
}

} // namespace dustlink::cli
