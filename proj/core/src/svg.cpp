#include "icurve/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "icurve/version.hpp"

namespace icurve {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kPad = 40.0;
constexpr double kLegendHeight = 90.0;

struct Frame {
  double min_x, max_y, scale;

  Point2 map(Point2 p) const { return {kPad + (p.x - min_x) * scale, kPad + (max_y - p.y) * scale}; }
};

Frame fit(const ClosedCurve& curve) {
  double min_x = curve.vertex(0).x, max_x = min_x;
  double min_y = curve.vertex(0).y, max_y = min_y;
  for (const Point2& p : curve.vertices()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-12});
  return {min_x, max_y, (kCanvas - 2 * kPad) / extent};
}

}  // namespace

std::string render_svg(const ClosedCurve& curve, const WhitneyReport* report) {
  const Frame frame = fit(curve);
  const double height = kCanvas + (report ? kLegendHeight : 0.0);

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      kCanvas, height);
  out += fmt::format("<!-- generated by icurve {} -->\n", kVersion);
  out += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n", kCanvas, height);

  out += "<path class=\"curve\" fill=\"none\" stroke=\"" + std::string(kCurveColor) +
         "\" stroke-width=\"1.5\" stroke-linejoin=\"round\" d=\"";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Point2 p = frame.map(curve.vertex(i));
    out += fmt::format("{}{:.3f},{:.3f} ", i == 0 ? "M" : "L", p.x, p.y);
  }
  out += "Z\"/>\n";

  // Arrowhead at the midpoint of edge 0, pointing along the traversal.
  {
    const Point2 tip = frame.map(curve.evaluate(0.5));
    const Vec2 d = curve.tangent(0.0);
    const Vec2 dir = {d.x, -d.y};  // screen y points down
    const Vec2 side = {-dir.y, dir.x};
    const double len = 12.0;
    const Point2 back = tip + (-len) * dir;
    const Point2 l = back + (0.5 * len) * side;
    const Point2 r = back + (-0.5 * len) * side;
    out += fmt::format(
        "<polygon class=\"orientation-arrow\" fill=\"{}\" points=\"{:.3f},{:.3f} {:.3f},{:.3f} "
        "{:.3f},{:.3f}\"/>\n",
        kCurveColor, tip.x, tip.y, l.x, l.y, r.x, r.y);
  }

  if (report) {
    const Point2 b = frame.map(report->base.location);
    out += fmt::format(
        "<rect class=\"base-point\" x=\"{:.3f}\" y=\"{:.3f}\" width=\"10\" height=\"10\" "
        "fill=\"{}\"/>\n",
        b.x - 5.0, b.y - 5.0, kBaseColor);
    for (const SignedIntersection& s : report->intersections) {
      const Point2 p = frame.map(s.base.point);
      const bool positive = s.sign > 0;
      out += fmt::format(
          "<circle class=\"intersection {}\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"5\" fill=\"{}\"/>\n",
          positive ? "positive" : "negative", p.x, p.y, positive ? kPositiveColor : kNegativeColor);
    }
    const double y0 = kCanvas + 10.0;
    out += fmt::format(
        "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"14\">\n"
        "<text x=\"{0}\" y=\"{1}\">index = {2}   mu = {3:+d}   N+ = {4}   N- = {5}</text>\n"
        "<circle cx=\"{6}\" cy=\"{7}\" r=\"5\" fill=\"{8}\"/><text x=\"{9}\" y=\"{10}\">positive</text>\n"
        "<circle cx=\"{11}\" cy=\"{7}\" r=\"5\" fill=\"{12}\"/><text x=\"{13}\" y=\"{10}\">negative</text>\n"
        "<rect x=\"{14}\" y=\"{15}\" width=\"10\" height=\"10\" fill=\"{16}\"/><text x=\"{17}\" y=\"{10}\">base point</text>\n"
        "</g>\n",
        kPad, y0 + 20.0, report->index, report->base.mu, report->n_plus, report->n_minus,
        kPad + 5.0, y0 + 45.0, kPositiveColor, kPad + 15.0, y0 + 50.0, kPad + 105.0,
        kNegativeColor, kPad + 115.0, kPad + 200.0, y0 + 40.0, kBaseColor, kPad + 215.0);
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const ClosedCurve& curve, const WhitneyReport* report,
               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << render_svg(curve, report);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace icurve
