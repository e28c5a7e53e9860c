#include "dustlink/attenuation.hpp"

#include <cmath>

#include "dustlink/errors.hpp"

namespace dustlink {

void StormProfile::validate() const
{
    detail::require_positive(reference_visibility_km, "reference visibility");
    detail::require_positive(reference_height_m, "reference height");
    detail::require_positive(height_m, "height");
    detail::require_non_negative(particle_radius_m, "particle radius");
    detail::require(std::isfinite(humidity_pct) && humidity_pct >= 0.0 && humidity_pct <= 100.0,
                    "humidity must lie in [0, 100] percent");
    detail::require_positive(gamma, "gamma");
    detail::require_finite(b, "b");
    detail::require_finite(c_const, "C");
    detail::require_finite(g_const, "g");
    detail::require_positive(size_unit_scale, "size unit scale");
}

double visibility_at_height(const StormProfile& profile)
{
    profile.validate();
    if (profile.height_m == profile.reference_height_m) {
        return profile.reference_visibility_km;
    }
    return profile.reference_visibility_km *
           std::pow(profile.height_m / profile.reference_height_m, profile.b / profile.gamma);
}

MieCoefficients mie_coefficients(const ComplexPermittivity& eps, const MieReading& reading)
{
    const double e1 = eps.eps1();
    const double e2 = eps.eps2();
    const double e2_sq = e2 * e2;
    const double denom = (e1 + 2.0) * (e1 + 2.0) + e2_sq;

    const double c1 = 6.0 * e2 / denom;

    const double lead = reading.c2_literal ? 67.0 : 7.0;
    const double c2 = e2 * ((lead * e1 * e1 + 7.0 * e2_sq + 4.0 * e1 - 20.0) / (5.0 * denom * denom) +
                            1.0 / 15.0 +
                            5.0 / (3.0 * ((2.0 * e1 + 3.0) * (2.0 * e1 + 3.0) + 4.0 * e2_sq)));

    double middle = 2.0 * (e1 - 1.0) * (e1 + 2.0) - 9.0;
    if (!reading.c3_literal) {
        middle *= e2_sq;
    }
    const double c3 =
        4.0 / 3.0 * (((e1 - 1.0) * (e1 - 1.0) * (e1 + 2.0) + middle + e2_sq * e2_sq) / (denom * denom));

    return {c1, c2, c3};
}

double specific_attenuation(const StormProfile& profile, double frequency_ghz,
                            const ComplexPermittivity& eps, const MieReading& reading)
{
    detail::require_positive(frequency_ghz, "frequency");
    const double visibility_km = visibility_at_height(profile);
    if (profile.particle_radius_m == 0.0) {
        return 0.0;
    }
    const auto [c1, c2, c3] = mie_coefficients(eps, reading);
    const double s = profile.size_unit_scale * profile.particle_radius_m * frequency_ghz;
    const double s_sq = s * s;
    return s / visibility_km * (c1 + c2 * s_sq + c3 * s_sq * s);
}

} // namespace dustlink
