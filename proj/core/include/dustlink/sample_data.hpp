#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "dustlink/permittivity.hpp"

namespace dustlink {

/// The nine storm-deposit samples collected in southern Libya: measured
/// density and Looyenga-mixed complex permittivity of each.
std::span<const SoilSample> reference_samples();

/// Reads the `id,density_g_cm3,eps1,eps2` sample table. Throws InvalidInput
/// with the offending line number on malformed input.
std::vector<SoilSample> read_samples_csv(std::istream& in);

/// Throws InvalidInput if the file cannot be opened.
std::vector<SoilSample> load_samples_csv(const std::filesystem::path& path);

void write_samples_csv(std::ostream& out, std::span<const SoilSample> samples);

} // namespace dustlink
