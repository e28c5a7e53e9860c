#include <benchmark/benchmark.h>

#include "commands.hpp"
#include "dustlink/linkbudget.hpp"

using namespace dustlink;

namespace {

StormProfile table_storm()
{
    StormProfile p;
    p.reference_visibility_km = 0.001;
    p.particle_radius_m = 538e-6;
    p.humidity_pct = 60.0;
    p.size_unit_scale = 83.2;
    return p;
}

} // namespace

static void BM_ThresholdRadius(benchmark::State& state)
{
    const auto& preset = band_preset("dsrc-5.9");
    const auto eps = humidity_adjusted_permittivity(60.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(threshold_particle_radius(preset.radio, {}, {390.0, 5.9}, table_storm(), eps));
    }
}
BENCHMARK(BM_ThresholdRadius);

static void BM_ThresholdVisibility(benchmark::State& state)
{
    const auto& preset = band_preset("mmwave-28");
    const auto eps = humidity_adjusted_permittivity(60.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(threshold_visibility(preset.radio, {}, {390.0, 28.0}, table_storm(), eps));
    }
}
BENCHMARK(BM_ThresholdVisibility);

static void BM_ThresholdTable(benchmark::State& state)
{
    cli::RunConfig config;
    config.storm.size_unit_scale = 83.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cli::run_threshold_table(config));
    }
}
BENCHMARK(BM_ThresholdTable)->Unit(benchmark::kMicrosecond);

static void BM_AttenuationSweep(benchmark::State& state)
{
    cli::RunConfig config;
    config.sweep.steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cli::run_attenuation_sweep(config));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * 3);
}
BENCHMARK(BM_AttenuationSweep)->Arg(41)->Arg(1001)->Unit(benchmark::kMicrosecond);
