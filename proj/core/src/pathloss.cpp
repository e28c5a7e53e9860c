#include "dustlink/pathloss.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "dustlink/errors.hpp"

namespace dustlink {

namespace {

std::string lower(std::string_view text)
{
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void validate(const Scenario& scenario, const LinkGeometry& geom)
{
    detail::require_non_negative(scenario.shadowing_db, "shadowing");
    detail::require_positive(geom.distance_m, "distance");
    detail::require_positive(geom.frequency_ghz, "frequency");
}

} // namespace

std::string_view to_string(Environment env) noexcept
{
    return env == Environment::Urban ? "urban" : "highway";
}

Environment parse_environment(std::string_view text)
{
    const auto key = lower(text);
    if (key == "urban") {
        return Environment::Urban;
    }
    if (key == "highway") {
        return Environment::Highway;
    }
    throw InvalidInput("unknown scenario '" + std::string(text) + "' (expected urban or highway)");
}

std::string_view to_string(DistanceMode mode) noexcept
{
    return mode == DistanceMode::PerKm ? "per-km" : "as-printed";
}

DistanceMode parse_distance_mode(std::string_view text)
{
    const auto key = lower(text);
    if (key == "per-km") {
        return DistanceMode::PerKm;
    }
    if (key == "as-printed") {
        return DistanceMode::AsPrinted;
    }
    throw InvalidInput("unknown distance mode '" + std::string(text) +
                       "' (expected per-km or as-printed)");
}

double baseline_path_loss(const Scenario& scenario, const LinkGeometry& geom)
{
    validate(scenario, geom);
    const double log_d = std::log10(geom.distance_m);
    const double log_f = std::log10(geom.frequency_ghz);
    switch (scenario.kind) {
    case Environment::Urban:
        return 38.77 + 16.7 * log_d + 18.2 * log_f + scenario.shadowing_db;
    case Environment::Highway:
        return 23.4 + 20.0 * log_d + 20.0 * log_f + scenario.shadowing_db;
    }
    throw InvalidInput("invalid scenario kind");
}

double dust_excess_loss(const LinkGeometry& geom, double attenuation_db_per_km, DistanceMode mode)
{
    detail::require_non_negative(attenuation_db_per_km, "attenuation");
    detail::require_positive(geom.distance_m, "distance");
    if (mode == DistanceMode::AsPrinted) {
        return attenuation_db_per_km;
    }
    return attenuation_db_per_km * (geom.distance_m / 1000.0);
}

double modified_path_loss(const Scenario& scenario, const LinkGeometry& geom,
                          double attenuation_db_per_km, DistanceMode mode)
{
    return baseline_path_loss(scenario, geom) + dust_excess_loss(geom, attenuation_db_per_km, mode);
}

LogNormalShadowing::LogNormalShadowing(double sigma_db) : sigma_db_(sigma_db)
{
    detail::require_non_negative(sigma_db, "shadowing sigma");
}

double LogNormalShadowing::draw(std::mt19937_64& rng) const
{
    if (sigma_db_ == 0.0) {
        return 0.0;
    }
    std::normal_distribution<double> dist(0.0, sigma_db_);
    return dist(rng);
}

} // namespace dustlink
