#include "icurve/construct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "icurve/intersect.hpp"
#include "icurve/splitmix.hpp"
#include "icurve/whitney.hpp"

namespace icurve {

namespace {

double segment_distance(Point2 p, Point2 p2, Point2 q, Point2 q2) {
  const double o1 = cross(p2 - p, q - p);
  const double o2 = cross(p2 - p, q2 - p);
  const double o3 = cross(q2 - q, p - q);
  const double o4 = cross(q2 - q, p2 - q);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
    return 0.0;
  }
  return std::min({point_segment_distance(p, q, q2), point_segment_distance(p2, q, q2),
                   point_segment_distance(q, p, p2), point_segment_distance(q2, p, p2)});
}

double curve_distance(const ClosedCurve& a, const ClosedCurve& b) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      best = std::min(best, segment_distance(a.edge_start(i), a.edge_end(i), b.edge_start(j),
                                             b.edge_end(j)));
    }
  }
  return best;
}

struct VerticalHit {
  std::size_t edge;
  double y;
};

// Edges crossed by the vertical line through x, or nullopt when the line
// passes through a vertex.
std::optional<std::vector<VerticalHit>> vertical_hits(const ClosedCurve& c, double x) {
  std::vector<VerticalHit> hits;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Point2 a = c.edge_start(k);
    const Point2 b = c.edge_end(k);
    if (a.x == x) return std::nullopt;
    if ((a.x - x) * (b.x - x) < 0.0) {
      const double s = (x - a.x) / (b.x - a.x);
      hits.push_back({k, a.y + s * (b.y - a.y)});
    }
  }
  return hits;
}

Point2 centroid(const ClosedCurve& c) {
  Point2 sum;
  for (const Point2& p : c.vertices()) sum = sum + p;
  const auto n = static_cast<double>(c.size());
  return {sum.x / n, sum.y / n};
}

}  // namespace

SeedDiskCurve seed_disk_boundary(int slots, const Layout& layout) {
  if (slots < 1) throw std::invalid_argument("seed needs at least one slot");
  const double band = layout.band_width;
  const double shift = layout.overlap_shift;
  const double end_cap = layout.slot_spacing * slots;  // where the second pass stops
  const double right = end_cap + shift;                // inner edge of the right column
  const double top = 2.0 * band + shift;               // inner edge of the top bar

  // Outer side of the band forward, the end cap, the inner side backward,
  // then the start cap. The second pass along the bottom runs `shift` above
  // the first one.
  std::vector<Point2> v = {
      {0.0, 0.0},
      {right + band, 0.0},
      {right + band, top + band},
      {-shift - band, top + band},
      {-shift - band, shift},
      {end_cap, shift},
      {end_cap, shift + band},
      {-shift, shift + band},
      {-shift, top},
      {right, top},
      {right, band},
      {0.0, band},
  };

  SeedDiskCurve seed{ClosedCurve::from_vertices(std::move(v)), {}, {}};
  for (int i = 1; i <= slots; ++i) {
    seed.anchors.push_back({layout.slot_spacing * i - layout.slot_spacing / 2.0,
                            layout.anchor_height});
  }
  seed.m2_anchor = {layout.slot_spacing / 2.0, shift + (band - shift) / 2.0};
  return seed;
}

ClosedCurve hole_boundary(Point2 center, const Layout& layout) {
  const int m = layout.hole_sides;
  std::vector<Point2> v;
  v.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double theta = -(2.0 * k + 1.0) * std::numbers::pi / m;
    v.push_back({center.x + layout.hole_radius * std::cos(theta),
                 center.y + layout.hole_radius * std::sin(theta)});
  }
  return ClosedCurve::from_vertices(std::move(v));
}

CurveSystem excise_disks(const SeedDiskCurve& seed, int g, const Layout& layout) {
  if (g < 1 || static_cast<std::size_t>(g) > seed.anchors.size()) {
    throw std::invalid_argument("number of holes must be between 1 and the number of anchors");
  }
  CurveSystem system{{seed.curve}};
  for (int i = 0; i < g; ++i) {
    const Point2 anchor = seed.anchors[static_cast<std::size_t>(i)];
    if (winding_number(seed.curve, anchor) != 1) {
      throw PlacementOverlapError("anchor " + std::to_string(i) +
                                  " is not in the multiplicity-1 region");
    }
    ClosedCurve hole = hole_boundary(anchor, layout);
    for (const ClosedCurve& other : system.components) {
      if (curve_distance(hole, other) <= Tolerances{}.separation) {
        throw PlacementOverlapError("hole " + std::to_string(i) + " touches existing geometry");
      }
    }
    system.components.push_back(std::move(hole));
  }
  return system;
}

CurveSystem glue_strip(const CurveSystem& system, std::size_t circle_index, const Layout& layout) {
  if (circle_index == 0 || circle_index >= system.components.size()) {
    throw std::invalid_argument("circle index must name a component other than the main curve");
  }
  const ClosedCurve& main = system.components[0];
  const ClosedCurve& circle = system.components[circle_index];
  const Point2 center = centroid(circle);
  const double xs[2] = {center.x - layout.strip_half_width, center.x + layout.strip_half_width};

  struct Leg {
    VerticalHit bottom;  // attachment on the circle
    VerticalHit top;     // crossing with the circle's top arc
    VerticalHit main;    // attachment on the main curve
  };
  Leg legs[2];
  for (int side = 0; side < 2; ++side) {
    const auto on_circle = vertical_hits(circle, xs[side]);
    const auto on_main = vertical_hits(main, xs[side]);
    if (!on_circle || !on_main || on_circle->size() != 2) {
      throw CorridorBlockedError("strip side does not meet the circle in two edge interiors");
    }
    auto [lo, hi] = std::minmax_element(on_circle->begin(), on_circle->end(),
                                        [](auto& a, auto& b) { return a.y < b.y; });
    std::optional<VerticalHit> attach;
    for (const VerticalHit& h : *on_main) {
      if (h.y > hi->y && (!attach || h.y < attach->y)) attach = h;
    }
    if (!attach) throw CorridorBlockedError("no strand of the main curve above the circle");
    legs[side] = {*lo, *hi, *attach};
  }
  if (legs[0].main.edge != legs[1].main.edge || main.edge_vector(legs[0].main.edge).x <= 0.0) {
    throw CorridorBlockedError("the strip must end on a single rightward edge of the main curve");
  }
  if (circle.edge_vector(legs[0].bottom.edge).x >= 0.0 ||
      circle.edge_vector(legs[1].bottom.edge).x >= 0.0) {
    throw CorridorBlockedError("the circle must be clockwise");
  }

  // Anything else crossing a strip side would add unplanned double points.
  for (int side = 0; side < 2; ++side) {
    const Leg& leg = legs[side];
    for (std::size_t c = 0; c < system.components.size(); ++c) {
      const ClosedCurve& comp = system.components[c];
      for (std::size_t k = 0; k < comp.size(); ++k) {
        if (c == 0 && k == leg.main.edge) continue;
        if (c == circle_index && (k == leg.bottom.edge || k == leg.top.edge)) continue;
        if (segment_distance({xs[side], leg.bottom.y}, {xs[side], leg.main.y}, comp.edge_start(k),
                             comp.edge_end(k)) <= 0.0) {
          throw CorridorBlockedError("strip corridor meets component " + std::to_string(c));
        }
      }
    }
  }

  // Main curve up to the attachment edge, down the left side, clockwise
  // around the circle from the left attachment to the right one, up the
  // right side and on along the main curve. Vertex 0 of the main curve stays
  // vertex 0.
  const std::size_t e = legs[0].main.edge;
  const std::size_t a = legs[0].bottom.edge;
  const std::size_t b = legs[1].bottom.edge;
  std::vector<Point2> merged;
  merged.reserve(main.size() + circle.size() + 4);
  for (std::size_t k = 0; k <= e; ++k) merged.push_back(main.vertex(k));
  merged.push_back({xs[0], legs[0].main.y});
  merged.push_back({xs[0], legs[0].bottom.y});
  for (std::size_t k = a + 1;; ++k) {
    merged.push_back(circle.vertex(k));
    if (k % circle.size() == b) break;
  }
  merged.push_back({xs[1], legs[1].bottom.y});
  merged.push_back({xs[1], legs[1].main.y});
  for (std::size_t k = e + 1; k < main.size(); ++k) merged.push_back(main.vertex(k));

  CurveSystem out;
  out.components.push_back(ClosedCurve::from_vertices(std::move(merged)));
  for (std::size_t c = 1; c < system.components.size(); ++c) {
    if (c != circle_index) out.components.push_back(system.components[c]);
  }
  return out;
}

ClosedCurve minimal_curve(int g, const Layout& layout) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1");
  CurveSystem system = excise_disks(seed_disk_boundary(g, layout), g, layout);
  for (int k = 0; k < g; ++k) system = glue_strip(system, 1, layout);
  ClosedCurve curve = system.components.front();

  if (auto err = validate(curve)) throw CertificationFailedError("validate", err->what());
  const WhitneyReport r = analyze(curve, {.finder = Finder::BruteForce, .convention = SignConvention::Standard, .tol = {}});
  auto require = [](bool ok, const char* field, int got) {
    if (!ok) throw CertificationFailedError(field, "got " + std::to_string(got));
  };
  require(r.total() == 2 * g + 2, "intersections", r.total());
  require(r.index == 1 - 2 * g, "index", r.index);
  require(r.base.mu == 1, "mu", r.base.mu);
  require(r.n_plus == 1, "n_plus", r.n_plus);
  require(r.n_minus == 2 * g + 1, "n_minus", r.n_minus);
  require(r.boundary_conditions.first_intersection_positive, "first_intersection_positive", 0);
  require(r.identity_holds, "identity_holds", 0);
  return curve;
}

std::vector<Point2> sample_random_curve(const RandomCurveSpec& spec, std::uint64_t attempt) {
  SplitMix64 rng(spec.seed ^ (attempt * 0xD1B54A32D192ED03ULL));
  struct Mode {
    double a, b, c, d;
  };
  std::vector<Mode> modes;
  double amp = 1.0;
  for (int k = 1; k <= spec.modes; ++k) {
    amp *= spec.decay;
    const double a = rng.next_signed();
    const double b = rng.next_signed();
    const double c = rng.next_signed();
    const double d = rng.next_signed();
    modes.push_back({amp * a, amp * b, amp * c, amp * d});
  }
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(spec.samples));
  for (int j = 0; j < spec.samples; ++j) {
    const double t = 2.0 * std::numbers::pi * j / spec.samples;
    Point2 p;
    for (int k = 1; k <= spec.modes; ++k) {
      const Mode& m = modes[static_cast<std::size_t>(k - 1)];
      const double ck = std::cos(k * t);
      const double sk = std::sin(k * t);
      p.x += m.a * ck + m.b * sk;
      p.y += m.c * ck + m.d * sk;
    }
    pts.push_back(p);
  }
  return pts;
}

ClosedCurve random_curve(const RandomCurveSpec& spec, const Tolerances& tol) {
  if (spec.modes < 1 || spec.samples < 64 || !(spec.decay > 0.0) || !std::isfinite(spec.decay)) {
    throw std::invalid_argument("random curve spec needs modes >= 1, samples >= 64, decay > 0");
  }
  for (std::uint64_t attempt = 0; attempt < kMaxRandomAttempts; ++attempt) {
    auto pts = sample_random_curve(spec, attempt);
    if (check_structure(pts, tol)) continue;
    ClosedCurve curve = ClosedCurve::from_vertices(std::move(pts), tol);
    if (!validate(curve, tol)) return curve;
  }
  throw GenericityExhaustedError("no generic curve after " + std::to_string(kMaxRandomAttempts) +
                                 " attempts for seed " + std::to_string(spec.seed));
}

}  // namespace icurve
