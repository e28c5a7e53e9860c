#pragma once

#include "dustlink/permittivity.hpp"

namespace dustlink {

/// Storm conditions at the receiver.
///
/// Visibility is given at a reference height and scaled to the evaluation
/// height with V^gamma = V0^gamma (h/h0)^b. `c_const` and `g_const` are
/// carried for completeness; the attenuation expression does not use them.
///
/// `size_unit_scale` multiplies the size-frequency product a_e * f. At 1.0
/// the radius is taken in metres and the frequency in GHz.
struct StormProfile {
    double reference_visibility_km = 1.0;
    double reference_height_m = 1.0;
    double height_m = 1.0;
    double particle_radius_m = 0.0;
    double humidity_pct = 0.0;
    double gamma = 1.07;
    double b = 0.28;
    double c_const = 2.3e-5;
    double g_const = 1.07;
    double size_unit_scale = 1.0;

    /// Throws InvalidInput on any broken invariant.
    void validate() const;
};

struct MieCoefficients {
    double c1;
    double c2;
    double c3;
};

/// Selects between the corrected and the verbatim-as-typeset forms of the
/// second and third expansion coefficients.
///
/// Corrected C2 uses 7*eps1^2 as its leading numerator term (typeset: 67).
/// Corrected C3 multiplies [2(eps1-1)(eps1+2) - 9] by eps2^2.
struct MieReading {
    bool c2_literal = false;
    bool c3_literal = false;
};

double visibility_at_height(const StormProfile& profile);

MieCoefficients mie_coefficients(const ComplexPermittivity& eps, const MieReading& reading = {});

/// Specific attenuation in dB/km of the small-particle Mie expansion
///
///     A = (s / V) (C1 + C2 s^2 + C3 s^3),   s = size_unit_scale * a_e * f
///
/// with V the height-adjusted visibility in km and f in GHz. Exactly zero
/// for a_e = 0.
double specific_attenuation(const StormProfile& profile, double frequency_ghz,
                            const ComplexPermittivity& eps, const MieReading& reading = {});

} // namespace dustlink
