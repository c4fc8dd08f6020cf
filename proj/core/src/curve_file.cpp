#include "icurve/curve_file.hpp"

#include <fmt/format.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace icurve {

using nlohmann::json;

CurveFile parse_curve_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CurveFileError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CurveFileError("document: expected a JSON object");

  const auto format = doc.find("format");
  if (format == doc.end() || !format->is_string() || *format != kCurveFormatTag) {
    throw CurveFileError(std::string("field 'format': expected \"") + kCurveFormatTag + "\"");
  }

  CurveFile file;
  const auto vertices = doc.find("vertices");
  if (vertices == doc.end() || !vertices->is_array()) {
    throw CurveFileError("field 'vertices': expected an array of [x, y] pairs");
  }
  for (std::size_t i = 0; i < vertices->size(); ++i) {
    const json& v = (*vertices)[i];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw CurveFileError(fmt::format("field 'vertices[{}]': expected an [x, y] number pair", i));
    }
    file.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
  }

  if (const auto meta = doc.find("metadata"); meta != doc.end()) {
    if (!meta->is_object()) throw CurveFileError("field 'metadata': expected an object");
    for (const auto& [key, value] : meta->items()) file.metadata[key] = value.dump();
  }
  return file;
}

CurveFile read_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CurveFileError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_curve_file(ss.str());
  } catch (const CurveFileError& e) {
    throw CurveFileError(path.string() + ": " + e.what());
  }
}

ClosedCurve read_curve(const std::filesystem::path& path) {
  return ClosedCurve::from_vertices(read_curve_file(path).vertices);
}

std::string format_curve_file(const CurveFile& file) {
  std::string out = fmt::format("{{\n  \"format\": \"{}\",\n  \"metadata\": {{", kCurveFormatTag);
  bool first = true;
  for (const auto& [key, value] : file.metadata) {
    out += fmt::format("{}\n    {}: {}", first ? "" : ",", json(key).dump(), value);
    first = false;
  }
  out += first ? "},\n" : "\n  },\n";
  out += "  \"vertices\": [";
  for (std::size_t i = 0; i < file.vertices.size(); ++i) {
    out += fmt::format("{}\n    [{:.17g}, {:.17g}]", i ? "," : "", file.vertices[i].x,
                       file.vertices[i].y);
  }
  out += file.vertices.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

void write_curve_file(const CurveFile& file, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CurveFileError("cannot write " + path.string());
  out << format_curve_file(file);
  if (!out) throw CurveFileError("write failed for " + path.string());
}

void write_curve(const ClosedCurve& curve, const std::filesystem::path& path,
                 const std::map<std::string, std::string>& metadata) {
  write_curve_file({{curve.vertices().begin(), curve.vertices().end()}, metadata}, path);
}

}  // namespace icurve
