#include <benchmark/benchmark.h>

#include "dustlink/linkbudget.hpp"

using namespace dustlink;

static void BM_SpecificAttenuation(benchmark::State& state)
{
    StormProfile p;
    p.reference_visibility_km = 0.01;
    p.particle_radius_m = 538e-6;
    p.humidity_pct = 60.0;
    const auto eps = humidity_adjusted_permittivity(60.0);
    double f = 5.9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specific_attenuation(p, f, eps));
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_SpecificAttenuation);

static void BM_EvaluateLink(benchmark::State& state)
{
    const auto& preset = band_preset("mmwave-28");
    StormProfile p;
    p.reference_visibility_km = 0.01;
    p.particle_radius_m = 200e-6;
    const auto eps = humidity_adjusted_permittivity(100.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_link(preset.radio, {}, {390.0, 28.0}, p, eps));
    }
}
BENCHMARK(BM_EvaluateLink);

static void BM_HumidityPermittivity(benchmark::State& state)
{
    double h = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(humidity_adjusted_permittivity(h));
        h = h >= 100.0 ? 0.0 : h + 0.5;
    }
}
BENCHMARK(BM_HumidityPermittivity);
