#include "icurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "icurve/intersect.hpp"
#include "icurve/whitney.hpp"

namespace icurve {

std::string_view to_string(GenericityKind kind) {
  switch (kind) {
    case GenericityKind::TooFewVertices: return "TooFewVertices";
    case GenericityKind::ZeroLengthEdge: return "ZeroLengthEdge";
    case GenericityKind::ReversalVertex: return "ReversalVertex";
    case GenericityKind::NonTransverseCrossing: return "NonTransverseCrossing";
    case GenericityKind::NearTriplePoint: return "NearTriplePoint";
    case GenericityKind::CrossingNearVertex: return "CrossingNearVertex";
    case GenericityKind::AmbiguousMinimum: return "AmbiguousMinimum";
  }
  return "Unknown";
}

namespace {

std::string describe(GenericityKind kind, const std::vector<double>& where,
                     const std::string& detail) {
  std::ostringstream os;
  os << to_string(kind);
  if (!where.empty()) {
    os << " at [";
    for (std::size_t i = 0; i < where.size(); ++i) os << (i ? ", " : "") << where[i];
    os << "]";
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

double angle_between(Vec2 in, Vec2 out) { return std::atan2(cross(in, out), dot(in, out)); }

}  // namespace

GenericityError::GenericityError(GenericityKind kind, std::vector<double> where,
                                 const std::string& detail)
    : std::runtime_error(describe(kind, where, detail)), kind_(kind), where_(std::move(where)) {}

ClosedCurve ClosedCurve::from_vertices(std::vector<Point2> vertices, const Tolerances& tol) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!is_finite(vertices[i])) {
      throw std::invalid_argument("vertex " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  if (auto err = check_structure(vertices, tol)) throw *err;
  return ClosedCurve(std::move(vertices));
}

Point2 ClosedCurve::evaluate(Param t) const {
  const auto n = static_cast<double>(size());
  t = std::fmod(t, n);
  if (t < 0.0) t += n;
  auto i = static_cast<std::size_t>(t);
  if (i >= size()) i = size() - 1;
  const double s = t - static_cast<double>(i);
  return edge_start(i) + s * edge_vector(i);
}

Vec2 ClosedCurve::tangent(Param t) const {
  const auto n = static_cast<double>(size());
  t = std::fmod(t, n);
  if (t < 0.0) t += n;
  auto i = static_cast<std::size_t>(t);
  if (i >= size()) i = size() - 1;
  return normalized(edge_vector(i));
}

std::optional<GenericityError> check_structure(std::span<const Point2> vertices,
                                               const Tolerances& tol) {
  const std::size_t n = vertices.size();
  if (n < 3) {
    return GenericityError(GenericityKind::TooFewVertices, {static_cast<double>(n)},
                           "a closed curve needs at least 3 vertices");
  }
  auto edge = [&](std::size_t i) { return vertices[(i + 1) % n] - vertices[i]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (norm(edge(i)) < tol.edge) {
      return GenericityError(GenericityKind::ZeroLengthEdge, {static_cast<double>(i)},
                             "edge shorter than the minimum length");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double a = angle_between(edge((i + n - 1) % n), edge(i));
    if (std::abs(a) >= std::numbers::pi - tol.turn) {
      return GenericityError(GenericityKind::ReversalVertex, {static_cast<double>(i)},
                             "the curve doubles back on itself");
    }
  }
  return std::nullopt;
}

std::optional<GenericityError> validate(const ClosedCurve& curve, const Tolerances& tol) {
  if (auto err = check_structure(curve.vertices(), tol)) return err;
  try {
    const auto xs = find_bruteforce(curve, tol);
    base_point(curve, xs, tol);
  } catch (const GenericityError& e) {
    return e;
  }
  return std::nullopt;
}

double turning_angle(const ClosedCurve& curve, std::size_t vertex_index) {
  const std::size_t n = curve.size();
  if (vertex_index >= n) throw std::out_of_range("vertex index out of range");
  return angle_between(curve.edge_vector((vertex_index + n - 1) % n),
                       curve.edge_vector(vertex_index));
}

int rotation_index(const ClosedCurve& curve) {
  double total = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) total += turning_angle(curve, i);
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-6) {
    throw std::logic_error("total turning is not a multiple of 2*pi");
  }
  return static_cast<int>(rounded);
}

double distance_to_curve(const ClosedCurve& curve, Point2 point) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < curve.size(); ++i) {
    best = std::min(best, point_segment_distance(point, curve.edge_start(i), curve.edge_end(i)));
  }
  return best;
}

int winding_number(const ClosedCurve& curve, Point2 point, const Tolerances& tol) {
  if (distance_to_curve(curve, point) < tol.separation) {
    throw PointOnCurveError("point lies on the curve");
  }
  // Signed crossings of the ray from `point` in the +x direction. Upward
  // edges count +1 when the point is on their left, downward edges -1 when it
  // is on their right; the half-open y test counts shared vertices once.
  int winding = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Point2 a = curve.edge_start(i);
    const Point2 b = curve.edge_end(i);
    const double side = cross(b - a, point - a);
    if (a.y <= point.y) {
      if (b.y > point.y && side > 0.0) ++winding;
    } else if (b.y <= point.y && side < 0.0) {
      --winding;
    }
  }
  return winding;
}

ClosedCurve reversed(const ClosedCurve& curve) {
  const std::size_t n = curve.size();
  std::vector<Point2> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = curve.vertex((n - k) % n);
  return ClosedCurve::from_vertices(std::move(out));
}

ClosedCurve mirror_x(const ClosedCurve& curve) {
  std::vector<Point2> out(curve.vertices().begin(), curve.vertices().end());
  for (auto& p : out) p.x = -p.x;
  return ClosedCurve::from_vertices(std::move(out));
}

ClosedCurve transformed(const ClosedCurve& curve, double angle, double scale, Vec2 shift) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::vector<Point2> out;
  out.reserve(curve.size());
  for (const Point2& p : curve.vertices()) {
    out.push_back(Point2{scale * (c * p.x - s * p.y), scale * (s * p.x + c * p.y)} + shift);
  }
  return ClosedCurve::from_vertices(std::move(out));
}

ClosedCurve refined(const ClosedCurve& curve) {
  std::vector<Point2> out;
  out.reserve(2 * curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out.push_back(curve.edge_start(i));
    out.push_back(curve.edge_start(i) + 0.5 * curve.edge_vector(i));
  }
  return ClosedCurve::from_vertices(std::move(out));
}

}  // namespace icurve
