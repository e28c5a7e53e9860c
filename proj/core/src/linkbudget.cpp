#include "dustlink/linkbudget.hpp"

#include <array>
#include <cmath>
#include <string>

#include "dustlink/errors.hpp"

namespace dustlink {

namespace {

constexpr RadioConfig make_radio(double gain_dbi, double rate_bps)
{
    RadioConfig r;
    r.tx_gain_dbi = gain_dbi;
    r.rx_gain_dbi = gain_dbi;
    r.tx_power_dbm = 27.0;
    r.data_rate_bps = rate_bps;
    r.circuit_loss_db = 5.0;
    r.noise_figure_db = 6.0;
    r.antenna_temperature_k = kReferenceTemperatureK;
    r.required_ebn0_db = 18.8;
    r.margin_threshold_db = 10.0;
    return r;
}

constexpr std::array<BandPreset, 2> kPresets{{
    {"dsrc-5.9", 5.9, make_radio(9.9, 27e6)},
    {"mmwave-28", 28.0, make_radio(23.4, 1e9)},
}};

// Scan resolution for the monotonicity guard in the threshold searches.
constexpr int kMonotoneProbes = 64;

double dust_excess_for(const LinkGeometry& geom, const StormProfile& profile,
                       const ComplexPermittivity& eps, const ModelOptions& options)
{
    const double attenuation = specific_attenuation(profile, geom.frequency_ghz, eps, options.mie);
    if (attenuation < 0.0) {
        throw NumericAssumptionViolated("expansion gives negative attenuation for this permittivity");
    }
    return dust_excess_loss(geom, attenuation, options.distance_mode);
}

} // namespace

void RadioConfig::validate() const
{
    detail::require_finite(tx_gain_dbi, "tx gain");
    detail::require_finite(rx_gain_dbi, "rx gain");
    detail::require_finite(tx_power_dbm, "tx power");
    detail::require_positive(data_rate_bps, "data rate");
    detail::require_non_negative(circuit_loss_db, "circuit loss");
    detail::require_non_negative(noise_figure_db, "noise figure");
    detail::require_positive(antenna_temperature_k, "antenna temperature");
    detail::require_finite(required_ebn0_db, "required Eb/N0");
    detail::require_finite(margin_threshold_db, "margin threshold");
}

std::span<const BandPreset> band_presets()
{
    return kPresets;
}

const BandPreset& band_preset(std::string_view name)
{
    for (const auto& p : kPresets) {
        if (p.name == name) {
            return p;
        }
    }
    throw InvalidInput("unknown band preset '" + std::string(name) +
                       "' (expected dsrc-5.9 or mmwave-28)");
}

double system_noise_temperature(const RadioConfig& config)
{
    config.validate();
    const double noise_factor = std::pow(10.0, config.noise_figure_db / 10.0);
    return config.antenna_temperature_k + (noise_factor - 1.0) * kReferenceTemperatureK;
}

double noise_power_dbm(const RadioConfig& config)
{
    const double watts = kBoltzmann * system_noise_temperature(config) * config.data_rate_bps;
    return 10.0 * std::log10(watts / 1e-3);
}

double link_margin(const RadioConfig& config, double modified_loss_db)
{
    detail::require_finite(modified_loss_db, "modified path loss");
    return config.tx_power_dbm + config.tx_gain_dbi + config.rx_gain_dbi - noise_power_dbm(config) -
           config.circuit_loss_db - modified_loss_db - config.required_ebn0_db;
}

LinkReport evaluate_link(const RadioConfig& config, const Scenario& scenario,
                         const LinkGeometry& geom, const StormProfile& profile,
                         const ComplexPermittivity& eps, const ModelOptions& options,
                         double shadowing_sample_db)
{
    detail::require_finite(shadowing_sample_db, "shadowing sample");
    LinkReport r{};
    r.baseline_loss_db = baseline_path_loss(scenario, geom) + shadowing_sample_db;
    r.dust_attenuation_db_per_km = specific_attenuation(profile, geom.frequency_ghz, eps, options.mie);
    r.dust_excess_db = dust_excess_loss(geom, r.dust_attenuation_db_per_km, options.distance_mode);
    r.modified_loss_db = r.baseline_loss_db + r.dust_excess_db;
    r.margin_db = link_margin(config, r.modified_loss_db);
    r.link_ok = r.margin_db >= config.margin_threshold_db;
    return r;
}

double max_allowed_excess_loss(const RadioConfig& config, const Scenario& scenario,
                               const LinkGeometry& geom)
{
    return link_margin(config, baseline_path_loss(scenario, geom)) - config.margin_threshold_db;
}

Threshold threshold_particle_radius(const RadioConfig& config, const Scenario& scenario,
                                    const LinkGeometry& geom, const StormProfile& profile,
                                    const ComplexPermittivity& eps, const ModelOptions& options)
{
    const double allowed = max_allowed_excess_loss(config, scenario, geom);
    if (allowed <= 0.0) {
        return {Threshold::Kind::FailsThroughoutBracket, 0.0};
    }

    StormProfile probe = profile;
    auto excess_at = [&](double radius_m) {
        probe.particle_radius_m = radius_m;
        return dust_excess_for(geom, probe, eps, options);
    };

    double previous = excess_at(0.0);
    for (int i = 1; i <= kMonotoneProbes; ++i) {
        const double current = excess_at(kRadiusBracketMaxM * i / kMonotoneProbes);
        if (current < previous) {
            throw NumericAssumptionViolated(
                "dust excess is not monotone in particle radius over [0, 5 mm]");
        }
        previous = current;
    }
    // previous now holds the excess at the upper bracket edge.
    if (previous <= allowed) {
        return {Threshold::Kind::NoFailureInBracket, kRadiusBracketMaxM};
    }

    double lo = 0.0;  // link ok
    double hi = kRadiusBracketMaxM;  // link fails
    while (hi - lo > kRadiusToleranceM) {
        const double mid = 0.5 * (lo + hi);
        if (excess_at(mid) > allowed) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {Threshold::Kind::Finite, 0.5 * (lo + hi)};
}

Threshold threshold_visibility(const RadioConfig& config, const Scenario& scenario,
                               const LinkGeometry& geom, const StormProfile& profile,
                               const ComplexPermittivity& eps, const ModelOptions& options)
{
    const double allowed = max_allowed_excess_loss(config, scenario, geom);
    if (allowed <= 0.0) {
        return {Threshold::Kind::FailsThroughoutBracket, kVisibilityBracketMaxKm};
    }

    StormProfile probe = profile;
    auto excess_at = [&](double visibility_km) {
        probe.reference_visibility_km = visibility_km;
        return dust_excess_for(geom, probe, eps, options);
    };

    const double log_lo = std::log(kVisibilityBracketMinKm);
    const double log_hi = std::log(kVisibilityBracketMaxKm);
    double previous = excess_at(kVisibilityBracketMinKm);
    const double at_floor = previous;
    for (int i = 1; i <= kMonotoneProbes; ++i) {
        const double v = std::exp(log_lo + (log_hi - log_lo) * i / kMonotoneProbes);
        const double current = excess_at(i == kMonotoneProbes ? kVisibilityBracketMaxKm : v);
        if (current > previous) {
            throw NumericAssumptionViolated(
                "dust excess is not monotone in visibility over [1e-4, 100] km");
        }
        previous = current;
    }
    if (at_floor <= allowed) {
        return {Threshold::Kind::NoFailureInBracket, kVisibilityBracketMinKm};
    }
    if (previous > allowed) {
        return {Threshold::Kind::FailsThroughoutBracket, kVisibilityBracketMaxKm};
    }

    double lo = kVisibilityBracketMinKm;  // link fails
    double hi = kVisibilityBracketMaxKm;  // link ok
    while (hi / lo - 1.0 > kVisibilityRelativeTolerance) {
        const double mid = std::sqrt(lo * hi);
        if (excess_at(mid) > allowed) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {Threshold::Kind::Finite, std::sqrt(lo * hi)};
}

double calibrate_size_unit_scale(double target_radius_m, const RadioConfig& config,
                                 const Scenario& scenario, const LinkGeometry& geom,
                                 const StormProfile& profile, const ComplexPermittivity& eps,
                                 const ModelOptions& options)
{
    detail::require(std::isfinite(target_radius_m) && target_radius_m > 0.0 &&
                        target_radius_m <= kRadiusBracketMaxM,
                    "calibration radius must lie in (0, 5 mm]");
    const double allowed = max_allowed_excess_loss(config, scenario, geom);
    detail::require(allowed > 0.0, "calibration needs a link that passes in clear air");

    // The radius enters only through s = scale * a_e * f, so solve for the
    // scale directly at the target radius.
    StormProfile probe = profile;
    probe.particle_radius_m = target_radius_m;
    auto excess_at = [&](double scale) {
        probe.size_unit_scale = scale;
        return dust_excess_for(geom, probe, eps, options);
    };

    double lo = 0.0;
    double hi = 1.0;
    while (excess_at(hi) <= allowed) {
        lo = hi;
        hi *= 2.0;
        detail::require(hi < 1e15, "no size unit scale reaches the allowed excess");
    }
    // Monotone in scale for positive expansion coefficients.
    for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (excess_at(mid) > allowed) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace dustlink
