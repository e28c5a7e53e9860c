#pragma once

#include <random>
#include <string>
#include <string_view>

namespace dustlink {

enum class Environment { Urban, Highway };

std::string_view to_string(Environment env) noexcept;

/// Accepts "urban" or "highway" (case-insensitive). Throws InvalidInput otherwise.
Environment parse_environment(std::string_view text);

struct Scenario {
    Environment kind = Environment::Urban;
    double shadowing_db = 0.0;
};

struct LinkGeometry {
    double distance_m = 390.0;
    double frequency_ghz = 5.9;
};

/// How the specific attenuation enters the path loss.
///
/// PerKm scales dB/km by the path length in km. AsPrinted adds the dB/km
/// figure to the loss directly, which reproduces the literal formula.
enum class DistanceMode { PerKm, AsPrinted };

std::string_view to_string(DistanceMode mode) noexcept;
DistanceMode parse_distance_mode(std::string_view text);

/// V2V line-of-sight loss in dB (d in metres, f in GHz):
///   urban    38.77 + 16.7 log10 d + 18.2 log10 f + shadowing
///   highway  23.4  + 20   log10 d + 20   log10 f + shadowing
double baseline_path_loss(const Scenario& scenario, const LinkGeometry& geom);

/// Dust contribution in dB for the given specific attenuation.
double dust_excess_loss(const LinkGeometry& geom, double attenuation_db_per_km,
                        DistanceMode mode = DistanceMode::PerKm);

double modified_path_loss(const Scenario& scenario, const LinkGeometry& geom,
                          double attenuation_db_per_km, DistanceMode mode = DistanceMode::PerKm);

/// Zero-mean Gaussian shadowing in dB (log-normal in linear power).
class LogNormalShadowing {
public:
    explicit LogNormalShadowing(double sigma_db);

    double sigma_db() const noexcept { return sigma_db_; }

    /// Draws one sample, advancing `rng`. Returns 0 when sigma is 0.
    double draw(std::mt19937_64& rng) const;

private:
    double sigma_db_;
};

} // namespace dustlink
