#pragma once

#include <icurve/construct.hpp>
#include <icurve/curve.hpp>
#include <icurve/intersect.hpp>
#include <icurve/splitmix.hpp>
#include <icurve/whitney.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace icurve::testing {

inline ClosedCurve regular_polygon(int sides, double radius, bool ccw, Point2 center = {}) {
  std::vector<Point2> v;
  for (int k = 0; k < sides; ++k) {
    const double t = 2.0 * std::numbers::pi * k / sides * (ccw ? 1.0 : -1.0);
    // Vertex 0 is the unique lowest point.
    const double a = t - std::numbers::pi / 2.0;
    v.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
  }
  return ClosedCurve::from_vertices(std::move(v));
}

/// (sin 2t, sin t) sampled at t_j = 2 pi (j + 1/4) / samples. The quarter
/// step keeps vertices off the double point (t = 0, pi) and off the minimum.
inline ClosedCurve figure_eight(int samples = 256) {
  std::vector<Point2> v;
  for (int j = 0; j < samples; ++j) {
    const double t = 2.0 * std::numbers::pi * (j + 0.25) / samples;
    v.push_back({std::sin(2.0 * t), std::sin(t)});
  }
  return ClosedCurve::from_vertices(std::move(v));
}

/// Spec of fuzz curve `seed`; shared by the property tests and the
/// acceptance suite.
inline RandomCurveSpec fuzz_spec(std::uint64_t seed) {
  constexpr double decays[3] = {0.7, 1.0, 1.4};
  return {seed, 2 + static_cast<int>(seed % 5), 256, decays[(seed / 5) % 3]};
}

inline ClosedCurve fuzz_curve(std::uint64_t seed) { return random_curve(fuzz_spec(seed)); }

/// Winding number by summing the signed angles subtended by each edge.
/// Independent of the ray-crossing implementation in the library.
inline int winding_by_angle_sum(const ClosedCurve& curve, Point2 p) {
  double total = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Vec2 a = curve.edge_start(i) - p;
    const Vec2 b = curve.edge_end(i) - p;
    total += std::atan2(cross(a, b), dot(a, b));
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

/// True when two closed segments share a point (exact orientation tests,
/// collinear overlaps included).
inline bool segments_meet(Point2 a, Point2 b, Point2 c, Point2 d) {
  auto orient = [](Point2 p, Point2 q, Point2 r) {
    const double v = cross(q - p, r - p);
    return (v > 0) - (v < 0);
  };
  auto on_segment = [](Point2 p, Point2 q, Point2 r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
           r.y <= std::max(p.y, q.y);
  };
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

inline bool curves_meet(const ClosedCurve& x, const ClosedCurve& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (segments_meet(x.edge_start(i), x.edge_end(i), y.edge_start(j), y.edge_end(j))) {
        return true;
      }
    }
  }
  return false;
}

/// Moves every vertex by up to `magnitude` per coordinate.
inline ClosedCurve jittered(const ClosedCurve& c, std::uint64_t seed, double magnitude) {
  SplitMix64 rng(seed);
  std::vector<Point2> v(c.vertices().begin(), c.vertices().end());
  for (Point2& p : v) {
    p.x += magnitude * rng.next_signed();
    p.y += magnitude * rng.next_signed();
  }
  return ClosedCurve::from_vertices(std::move(v));
}

/// Identical pair sets: same (t1, t2) bitwise and points within `eps`.
inline bool same_intersections(const std::vector<Intersection>& a,
                               const std::vector<Intersection>& b, double eps = 1e-9) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].t1 != b[k].t1 || a[k].t2 != b[k].t2) return false;
    if (distance(a[k].point, b[k].point) > eps) return false;
  }
  return true;
}

/// Index of the double-point visit gap (between consecutive visits, walking
/// forward from parameter 0) that contains `t`; visits are at every t1, t2.
inline std::size_t arc_of(const std::vector<Intersection>& xs, Param t) {
  std::size_t before = 0;
  for (const Intersection& x : xs) before += (x.t1 < t) + (x.t2 < t);
  return xs.empty() ? 0 : before % (2 * xs.size());
}

}  // namespace icurve::testing
