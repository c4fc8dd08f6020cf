#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "icurve/curve.hpp"

namespace icurve {

inline constexpr const char* kCurveFormatTag = "icurve-v1";

/// Contents of an icurve-v1 JSON document:
///
///   {"format": "icurve-v1", "metadata": {...}, "vertices": [[x, y], ...]}
///
/// Vertices are written with 17 significant digits. Metadata values are
/// strings, integers or numbers and are kept as their JSON text.
struct CurveFile {
  std::vector<Point2> vertices;
  std::map<std::string, std::string> metadata;  // key -> JSON-encoded value
};

class CurveFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses without structural checks. Throws CurveFileError with line/field
/// context on malformed input.
CurveFile parse_curve_file(const std::string& text);
CurveFile read_curve_file(const std::filesystem::path& path);

/// read_curve_file followed by ClosedCurve::from_vertices; structural
/// violations surface as GenericityError.
ClosedCurve read_curve(const std::filesystem::path& path);

std::string format_curve_file(const CurveFile& file);
void write_curve_file(const CurveFile& file, const std::filesystem::path& path);
void write_curve(const ClosedCurve& curve, const std::filesystem::path& path,
                 const std::map<std::string, std::string>& metadata = {});

}  // namespace icurve
