#include "icurve/whitney.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace icurve {

BasePoint base_point(const ClosedCurve& curve, const std::vector<Intersection>& xs,
                     const Tolerances& tol) {
  const std::size_t n = curve.size();
  double ymin = std::numeric_limits<double>::infinity();
  for (const Point2& p : curve.vertices()) ymin = std::min(ymin, p.y);

  std::vector<std::size_t> lowest;
  for (std::size_t i = 0; i < n; ++i) {
    if (curve.vertex(i).y <= ymin + tol.min_margin) lowest.push_back(i);
  }

  BasePoint base;
  if (lowest.size() == 1) {
    const std::size_t v = lowest.front();
    base.param = static_cast<double>(v);
    base.location = curve.vertex(v);
    // Incoming edge points down and outgoing up, so a left turn passes
    // through +x and a right turn through -x.
    base.mu = turning_angle(curve, v) > 0.0 ? 1 : -1;
  } else if (lowest.size() == 2 && detail::edges_adjacent(lowest[0], lowest[1], n)) {
    const std::size_t e = (lowest[0] == 0 && lowest[1] == n - 1) ? n - 1 : lowest[0];
    base.param = static_cast<double>(e) + 0.5;
    base.location = curve.evaluate(base.param);
    base.mu = curve.edge_vector(e).x > 0.0 ? 1 : -1;
  } else {
    std::vector<double> where(lowest.begin(), lowest.end());
    throw GenericityError(GenericityKind::AmbiguousMinimum, std::move(where),
                          "the lowest point is neither a unique vertex nor a unique bottom edge");
  }

  const auto period = static_cast<double>(n);
  for (const Intersection& x : xs) {
    for (const Param t : {x.t1, x.t2}) {
      double d = std::abs(t - base.param);
      d = std::min(d, period - d);
      if (d < tol.vertex_gap) {
        throw GenericityError(GenericityKind::AmbiguousMinimum, {base.param, t},
                              "the lowest point is a double point");
      }
    }
  }
  return base;
}

BasePoint base_point(const ClosedCurve& curve, const Tolerances& tol) {
  return base_point(curve, find_sweep(curve, tol), tol);
}

std::vector<SignedIntersection> sign_intersections(const ClosedCurve& curve,
                                                   const BasePoint& base,
                                                   const std::vector<Intersection>& xs,
                                                   SignConvention convention,
                                                   const Tolerances& tol) {
  std::vector<SignedIntersection> out;
  out.reserve(xs.size());
  for (const VisitEvent& v : order_from(xs, base.param, curve.size(), tol.vertex_gap)) {
    if (v.which != Visit::First) continue;
    const Intersection& x = xs[v.intersection];
    const bool first_is_t1 = v.param == x.t1;
    const Vec2 v1 = first_is_t1 ? x.dir1 : x.dir2;
    const Vec2 v2 = first_is_t1 ? x.dir2 : x.dir1;
    const double c = convention == SignConvention::Standard ? cross(v2, v1) : cross(v1, v2);
    out.push_back({x, c > 0.0 ? 1 : -1, v.distance});
  }
  return out;
}

WhitneyReport analyze(const ClosedCurve& curve, const AnalyzeOptions& options) {
  const Tolerances& tol = options.tol;
  if (auto err = check_structure(curve.vertices(), tol)) throw *err;
  const auto xs = find_intersections(curve, options.finder, tol);

  WhitneyReport report;
  report.base = base_point(curve, xs, tol);
  report.index = rotation_index(curve);
  report.intersections = sign_intersections(curve, report.base, xs, options.convention, tol);
  for (const auto& s : report.intersections) (s.sign > 0 ? report.n_plus : report.n_minus)++;
  report.identity_holds = report.index == report.base.mu + report.n_plus - report.n_minus;

  if (report.index <= -1 && report.index % 2 != 0) report.candidate_genus = (1 - report.index) / 2;

  auto& bc = report.boundary_conditions;
  bc.index_is_1_minus_2g = report.candidate_genus.has_value();
  bc.mu_is_plus_one = report.base.mu == 1;
  bc.first_intersection_positive =
      !report.intersections.empty() && report.intersections.front().sign > 0;
  bc.count_at_least_2g_plus_2 =
      report.candidate_genus && report.total() >= 2 * *report.candidate_genus + 2;
  return report;
}

}  // namespace icurve
