#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli_errors.hpp"
#include "commands.hpp"
#include "dustlink/errors.hpp"
#include "run_config.hpp"
#include "svg_plot.hpp"

namespace {

using namespace dustlink::cli;

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    Overrides overrides;
};

void add_common(CLI::App& cmd, CommonArgs& args)
{
    cmd.add_option("--config", args.config_path, "JSON run configuration");
    cmd.add_option("--out", args.out_path, "Output CSV path (default stdout)");
    cmd.add_option("--preset", args.overrides.preset, "Band preset: dsrc-5.9 or mmwave-28");
    cmd.add_option("--humidity", args.overrides.humidity, "Humidity list in percent, e.g. 0,60,100")
        ->delimiter(',');
    cmd.add_option("--distance-m", args.overrides.distance_m, "Vehicle separation in metres");
    cmd.add_option("--visibility-km", args.overrides.visibility_km, "Reference visibility in km");
    cmd.add_option("--particle-um", args.overrides.particle_um, "Equivalent particle radius in um");
    cmd.add_option("--scenario", args.overrides.scenario, "urban or highway");
    cmd.add_option("--seed", args.overrides.seed, "Seed for stochastic shadowing");
    cmd.add_option("--size-unit-scale", args.overrides.size_unit_scale,
                   "Multiplier on the radius-frequency product");
}

RunConfig resolve(const CommonArgs& args)
{
    RunConfig config = args.config_path.empty() ? RunConfig{} : load_run_config(args.config_path);
    apply_overrides(config, args.overrides);
    return config;
}

void emit(const CsvTable& table, const std::string& out_path)
{
    if (out_path.empty()) {
        table.write(std::cout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + out_path);
    }
    table.write(out);
    if (!out) {
        throw IoError("write failed for " + out_path);
    }
}

void append_rows(const CsvTable& table, const std::string& out_path)
{
    std::error_code ec;
    const bool fresh = !std::filesystem::exists(out_path, ec) || std::filesystem::file_size(out_path, ec) == 0;
    std::ofstream out(out_path, std::ios::binary | std::ios::app);
    if (!out) {
        throw IoError("cannot append to " + out_path);
    }
    table.write(out, fresh);
    if (!out) {
        throw IoError("write failed for " + out_path);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dust and sand storm impact on V2V radio links"};
    app.require_subcommand(1);

    CommonArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Attenuation and margin sweep, one row per humidity and point");
    add_common(*sweep, sweep_args);
    sweep->add_option("--sweep", sweep_args.overrides.sweep_variable,
                      "visibility, particle_radius, frequency, distance or humidity");
    sweep->add_option("--sweep-min", sweep_args.overrides.sweep_min, "Sweep start");
    sweep->add_option("--sweep-max", sweep_args.overrides.sweep_max, "Sweep end");
    sweep->add_option("--steps", sweep_args.overrides.sweep_steps, "Number of sweep points");
    sweep->add_option("--spacing", sweep_args.overrides.sweep_spacing, "linear or log");

    CommonArgs margin_args;
    auto* margin = app.add_subcommand("margin", "Link report at one operating point");
    add_common(*margin, margin_args);

    CommonArgs threshold_args;
    auto* thresholds = app.add_subcommand("thresholds", "Critical visibility and particle radius table");
    add_common(*thresholds, threshold_args);

    std::string plot_in;
    std::string plot_out;
    PlotOptions plot_options;
    auto* plot = app.add_subcommand("plot", "Render a sweep CSV as SVG");
    plot->add_option("--in,input", plot_in, "Sweep CSV")->required();
    plot->add_option("--out", plot_out, "SVG output path")->required();
    plot->add_option("--x", plot_options.x_column, "Column for the horizontal axis");
    plot->add_option("--y", plot_options.y_column, "Column for the vertical axis");
    plot->add_option("--log-x", plot_options.log_x, "Force log (true) or linear (false) x axis");
    plot->add_option("--title", plot_options.title, "Plot title");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (sweep->parsed()) {
            emit(run_attenuation_sweep(resolve(sweep_args)), sweep_args.out_path);
        } else if (margin->parsed()) {
            const auto config = resolve(margin_args);
            const auto result = run_margin_report(config);
            print_margin_report(std::cout, config, result);
            if (!margin_args.out_path.empty()) {
                append_rows(result.csv, margin_args.out_path);
            }
        } else if (thresholds->parsed()) {
            emit(run_threshold_table(resolve(threshold_args)), threshold_args.out_path);
        } else if (plot->parsed()) {
            render_plot(plot_in, plot_out, plot_options);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const dustlink::InvalidInput& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
