#pragma once

#include <filesystem>
#include <string>

#include "icurve/curve.hpp"
#include "icurve/whitney.hpp"

namespace icurve {

// Marker palette.
inline constexpr const char* kPositiveColor = "#1f77b4";  // blue
inline constexpr const char* kNegativeColor = "#d62728";  // red
inline constexpr const char* kBaseColor = "#2ca02c";      // green
inline constexpr const char* kCurveColor = "#222222";

/// Standalone SVG 1.1 document. Without a report only the path and the
/// orientation arrow are drawn. With one, every double point gets a
/// <circle class="intersection positive|negative"> marker, the base point a
/// <rect class="base-point">, and a legend lists index, mu, N+ and N-.
std::string render_svg(const ClosedCurve& curve, const WhitneyReport* report);

void write_svg(const ClosedCurve& curve, const WhitneyReport* report,
               const std::filesystem::path& path);

}  // namespace icurve
