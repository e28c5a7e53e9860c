#pragma once

#include <span>
#include <string>

namespace dustlink {

/// Complex relative permittivity eps1 - j*eps2 of a dusty medium.
///
/// The loss factor is stored as a non-negative number; the minus sign of
/// the engineering convention is implied.
class ComplexPermittivity {
public:
    /// Throws InvalidInput unless eps1 >= 1 and eps2 >= 0.
    ComplexPermittivity(double eps1, double eps2);

    double eps1() const noexcept { return eps1_; }
    double eps2() const noexcept { return eps2_; }

    friend bool operator==(const ComplexPermittivity&, const ComplexPermittivity&) = default;

private:
    double eps1_;
    double eps2_;
};

struct MineralComponent {
    ComplexPermittivity permittivity;
    double volume_fraction;
};

struct SoilSample {
    std::string id;
    double density_g_cm3;
    ComplexPermittivity permittivity;
};

/// Looyenga effective-medium rule: eps_m^(1/3) = sum_i v_i * eps_i^(1/3).
///
/// Uses principal complex cube roots of eps1 + j*eps2. Fractions must sum
/// to one within 1e-9.
ComplexPermittivity looyenga_mix(std::span<const MineralComponent> components);

/// Component-wise arithmetic mean of the sample permittivities. This is not
/// a mixing rule; it is the plain average used to summarise a sample table.
ComplexPermittivity mean_permittivity(std::span<const SoilSample> samples);

double mean_density(std::span<const SoilSample> samples);

/// Cubic humidity dependence of the regional mean permittivity.
///
/// eps1(H) = base_eps1 + 0.04 H - 7.78e-4 H^2 + 5.56e-6 H^3
/// eps2(H) = base_eps2 + 0.02 H - 3.71e-4 H^2 + 2.76e-6 H^3
/// with H the relative humidity in percent. The base terms default to the
/// southern-Libya sample mean and may be replaced for another region.
struct HumidityModel {
    double base_eps1 = 6.3485;
    double base_eps2 = 0.0929;

    /// Throws InvalidInput for humidity outside [0, 100].
    ComplexPermittivity at(double humidity_pct) const;
};

ComplexPermittivity humidity_adjusted_permittivity(double humidity_pct,
                                                   const HumidityModel& model = {});

} // namespace dustlink
