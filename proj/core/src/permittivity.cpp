#include "dustlink/permittivity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "dustlink/errors.hpp"

namespace dustlink {

namespace {

constexpr double kFractionTolerance = 1e-9;

// Principal cube root. The argument of eps1 + j*eps2 lies in [0, pi/2) for
// any valid permittivity, so the branch cut is never approached.
std::complex<double> principal_cbrt(std::complex<double> z)
{
    return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

} // namespace

ComplexPermittivity::ComplexPermittivity(double eps1, double eps2) : eps1_(eps1), eps2_(eps2)
{
    detail::require(std::isfinite(eps1) && eps1 >= 1.0, "permittivity eps1 must be >= 1");
    detail::require(std::isfinite(eps2) && eps2 >= 0.0, "permittivity eps2 must be >= 0");
}

ComplexPermittivity looyenga_mix(std::span<const MineralComponent> components)
{
    detail::require(!components.empty(), "looyenga_mix needs at least one component");

    double fraction_sum = 0.0;
    std::complex<double> root_sum{0.0, 0.0};
    for (const auto& c : components) {
        detail::require(std::isfinite(c.volume_fraction) && c.volume_fraction >= 0.0 &&
                            c.volume_fraction <= 1.0,
                        "volume fraction must lie in [0, 1]");
        fraction_sum += c.volume_fraction;
        const std::complex<double> eps{c.permittivity.eps1(), c.permittivity.eps2()};
        root_sum += c.volume_fraction * principal_cbrt(eps);
    }
    detail::require(std::abs(fraction_sum - 1.0) <= kFractionTolerance,
                    "volume fractions must sum to 1");

    const auto mixed = root_sum * root_sum * root_sum;
    // Rounding can leave a -1e-17 imaginary part for lossless inputs.
    return ComplexPermittivity{mixed.real(), std::max(mixed.imag(), 0.0)};
}

ComplexPermittivity mean_permittivity(std::span<const SoilSample> samples)
{
    detail::require(!samples.empty(), "mean_permittivity needs at least one sample");
    double sum1 = 0.0;
    double sum2 = 0.0;
    for (const auto& s : samples) {
        sum1 += s.permittivity.eps1();
        sum2 += s.permittivity.eps2();
    }
    const auto n = static_cast<double>(samples.size());
    return ComplexPermittivity{sum1 / n, sum2 / n};
}

double mean_density(std::span<const SoilSample> samples)
{
    detail::require(!samples.empty(), "mean_density needs at least one sample");
    double sum = 0.0;
    for (const auto& s : samples) {
        detail::require_positive(s.density_g_cm3, "sample density");
        sum += s.density_g_cm3;
    }
    return sum / static_cast<double>(samples.size());
}

ComplexPermittivity HumidityModel::at(double humidity_pct) const
{
    detail::require(std::isfinite(humidity_pct) && humidity_pct >= 0.0 && humidity_pct <= 100.0,
                    "humidity must lie in [0, 100] percent");
    const double h = humidity_pct;
    // Horner form; at H = 0 both reduce to the base constants exactly.
    const double eps1 = base_eps1 + h * (0.04 + h * (-7.78e-4 + h * 5.56e-6));
    const double eps2 = base_eps2 + h * (0.02 + h * (-3.71e-4 + h * 2.76e-6));
    return ComplexPermittivity{eps1, eps2};
}

ComplexPermittivity humidity_adjusted_permittivity(double humidity_pct, const HumidityModel& model)
{
    return model.at(humidity_pct);
}

} // namespace dustlink
