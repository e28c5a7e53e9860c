#pragma once

#include <span>
#include <string_view>

#include "dustlink/attenuation.hpp"
#include "dustlink/pathloss.hpp"
#include "dustlink/permittivity.hpp"

namespace dustlink {

inline constexpr double kBoltzmann = 1.380649e-23;  // J/K
inline constexpr double kReferenceTemperatureK = 290.0;

struct RadioConfig {
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    double tx_power_dbm = 0.0;
    double data_rate_bps = 1.0;
    double circuit_loss_db = 0.0;
    double noise_figure_db = 0.0;
    double antenna_temperature_k = kReferenceTemperatureK;
    double required_ebn0_db = 0.0;
    double margin_threshold_db = 10.0;

    void validate() const;

    /// Transmit power plus transmit gain. Display only; never an input.
    double eirp_dbm() const noexcept { return tx_power_dbm + tx_gain_dbi; }
};

/// A named radio configuration with its carrier frequency.
struct BandPreset {
    std::string_view name;
    double frequency_ghz;
    RadioConfig radio;
};

/// `dsrc-5.9` and `mmwave-28`.
std::span<const BandPreset> band_presets();

/// Throws InvalidInput for an unknown name.
const BandPreset& band_preset(std::string_view name);

/// T_s = T_A + (F - 1) * 290 K with F converted from dB.
double system_noise_temperature(const RadioConfig& config);

/// 10 log10(k T_s R / 1 mW): noise power in the bit-rate bandwidth.
double noise_power_dbm(const RadioConfig& config);

/// Link margin in dB:
///   M = P_t + G_t + G_r - N - L0 - L_sm - (Eb/N0)_req
/// which is the ratio G_t G_r P_t / (k T_s R L0 L_sm Eb/N0) expressed in dB.
double link_margin(const RadioConfig& config, double modified_loss_db);

/// Options shared by every forward evaluation.
struct ModelOptions {
    DistanceMode distance_mode = DistanceMode::PerKm;
    MieReading mie;
};

struct LinkReport {
    double baseline_loss_db;
    double dust_attenuation_db_per_km;
    double dust_excess_db;
    double modified_loss_db;
    double margin_db;
    bool link_ok;
};

/// Full chain: attenuation -> modified path loss -> margin.
///
/// `shadowing_sample_db` is an extra additive term (for a stochastic
/// shadowing draw) on top of `scenario.shadowing_db`.
LinkReport evaluate_link(const RadioConfig& config, const Scenario& scenario,
                         const LinkGeometry& geom, const StormProfile& profile,
                         const ComplexPermittivity& eps, const ModelOptions& options = {},
                         double shadowing_sample_db = 0.0);

/// Largest dust excess (dB) that keeps the margin at or above the
/// threshold. Negative when the clear-air link already fails.
double max_allowed_excess_loss(const RadioConfig& config, const Scenario& scenario,
                               const LinkGeometry& geom);

inline constexpr double kRadiusBracketMaxM = 5e-3;
inline constexpr double kRadiusToleranceM = 1e-8;
inline constexpr double kVisibilityBracketMinKm = 1e-4;
inline constexpr double kVisibilityBracketMaxKm = 100.0;
inline constexpr double kVisibilityRelativeTolerance = 1e-6;

/// Outcome of a threshold search.
///
/// Finite: the link fails beyond `value`.
/// NoFailureInBracket: the link survives over the whole search bracket.
/// FailsThroughoutBracket: the link fails everywhere; `value` is the
/// bracket edge (0 m for radius, the upper visibility bound for visibility).
struct Threshold {
    enum class Kind { Finite, NoFailureInBracket, FailsThroughoutBracket };

    Kind kind;
    double value;

    bool no_failure() const noexcept { return kind == Kind::NoFailureInBracket; }
};

/// Critical equivalent particle radius (m) at the profile's visibility.
///
/// Bisection over [0, 5 mm] to 1e-8 m. The profile's own radius is ignored.
/// Throws NumericAssumptionViolated if the dust excess is not monotone
/// non-decreasing over the bracket.
Threshold threshold_particle_radius(const RadioConfig& config, const Scenario& scenario,
                                    const LinkGeometry& geom, const StormProfile& profile,
                                    const ComplexPermittivity& eps,
                                    const ModelOptions& options = {});

/// Critical reference visibility (km) below which the margin drops under
/// the threshold, at the profile's particle radius.
///
/// Log-domain bisection over [1e-4, 100] km to a relative width of 1e-6.
Threshold threshold_visibility(const RadioConfig& config, const Scenario& scenario,
                               const LinkGeometry& geom, const StormProfile& profile,
                               const ComplexPermittivity& eps, const ModelOptions& options = {});

/// Returns the size_unit_scale at which threshold_particle_radius yields
/// `target_radius_m` for the given configuration. The critical radius is
/// inversely proportional to the scale, so one solve at the profile's scale
/// fixes it. Throws InvalidInput if the link has no finite threshold there.
double calibrate_size_unit_scale(double target_radius_m, const RadioConfig& config,
                                 const Scenario& scenario, const LinkGeometry& geom,
                                 const StormProfile& profile, const ComplexPermittivity& eps,
                                 const ModelOptions& options = {});

} // namespace dustlink
