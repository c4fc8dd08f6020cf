#include "icurve/intersect.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace icurve {
namespace detail {

bool edges_adjacent(std::size_t i, std::size_t j, std::size_t n) {
  if (i == j) return true;
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);
  return hi - lo == 1 || (lo == 0 && hi == n - 1);
}

namespace {

bool segments_touch(Point2 p, Point2 p2, Point2 q, Point2 q2, double eps) {
  const double o1 = cross(p2 - p, q - p);
  const double o2 = cross(p2 - p, q2 - p);
  const double o3 = cross(q2 - q, p - q);
  const double o4 = cross(q2 - q, p2 - q);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
    return true;
  }
  const double d = std::min({point_segment_distance(p, q, q2), point_segment_distance(p2, q, q2),
                             point_segment_distance(q, p, p2), point_segment_distance(q2, p, p2)});
  return d <= eps;
}

}  // namespace

PairResult classify_pair(const ClosedCurve& curve, std::size_t i, std::size_t j,
                         const Tolerances& tol) {
  const Point2 p = curve.edge_start(i);
  const Vec2 r = curve.edge_vector(i);
  const Point2 q = curve.edge_start(j);
  const Vec2 s = curve.edge_vector(j);

  const double denom = cross(r, s);
  if (std::abs(denom) < std::sin(tol.angle) * norm(r) * norm(s)) {
    if (segments_touch(p, p + r, q, q + s, tol.separation)) {
      return {PairKind::NonTransverse, 0.0, 0.0, {}};
    }
    return {};
  }

  const Vec2 w = q - p;
  const double t = cross(w, s) / denom;
  const double u = cross(w, r) / denom;
  const double g = tol.vertex_gap;
  if (t > g && t < 1.0 - g && u > g && u < 1.0 - g) {
    return {PairKind::Crossing, t, u, p + t * r};
  }
  if (t >= -g && t <= 1.0 + g && u >= -g && u <= 1.0 + g) {
    return {PairKind::NearVertex, t, u, p + t * r};
  }
  return {};
}

}  // namespace detail

namespace {

using detail::PairKind;
using detail::PairResult;

Intersection make_intersection(const ClosedCurve& curve, std::size_t i, std::size_t j,
                               const PairResult& r) {
  return Intersection{static_cast<double>(i) + r.s, static_cast<double>(j) + r.u, r.point,
                      normalized(curve.edge_vector(i)), normalized(curve.edge_vector(j))};
}

[[noreturn]] void throw_pair_error(std::size_t i, std::size_t j, PairKind kind) {
  const auto where = std::vector<double>{static_cast<double>(i), static_cast<double>(j)};
  if (kind == PairKind::NonTransverse) {
    throw GenericityError(GenericityKind::NonTransverseCrossing, where,
                          "edges touch or overlap at a shallow angle");
  }
  throw GenericityError(GenericityKind::CrossingNearVertex, where,
                        "edges meet within the vertex gap of an endpoint");
}

using Degeneracies = std::map<std::pair<std::size_t, std::size_t>, PairKind>;

// Rejects degenerate pairs and coincident double points in clause order
// (shallow or overlapping contact, then triple points, then contact near a
// vertex; lowest edge pair first), then sorts by (t1, t2).
std::vector<Intersection> finalize(std::vector<Intersection> xs, const Degeneracies& degenerate,
                                   const Tolerances& tol) {
  for (const auto& [pair, kind] : degenerate) {
    if (kind == PairKind::NonTransverse) throw_pair_error(pair.first, pair.second, kind);
  }
  std::sort(xs.begin(), xs.end(), [](const Intersection& a, const Intersection& b) {
    return a.t1 < b.t1 || (a.t1 == b.t1 && a.t2 < b.t2);
  });
  std::vector<std::size_t> by_x(xs.size());
  for (std::size_t k = 0; k < by_x.size(); ++k) by_x[k] = k;
  std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
    return xs[a].point.x < xs[b].point.x || (xs[a].point.x == xs[b].point.x && a < b);
  });
  // Coincident double points, found through an x-sorted window.
  std::optional<std::pair<std::size_t, std::size_t>> worst;
  for (std::size_t a = 0; a < by_x.size(); ++a) {
    for (std::size_t b = a + 1; b < by_x.size(); ++b) {
      if (xs[by_x[b]].point.x - xs[by_x[a]].point.x >= tol.separation) break;
      if (distance(xs[by_x[a]].point, xs[by_x[b]].point) < tol.separation) {
        const std::pair<std::size_t, std::size_t> pair{std::min(by_x[a], by_x[b]),
                                                    std::max(by_x[a], by_x[b])};
        if (!worst || pair < *worst) worst = pair;
      }
    }
  }
  if (worst) {
    throw GenericityError(GenericityKind::NearTriplePoint,
                          {xs[worst->first].t1, xs[worst->second].t1},
                          "two double points coincide");
  }
  if (!degenerate.empty()) {
    const auto& [pair, kind] = *degenerate.begin();
    throw_pair_error(pair.first, pair.second, kind);
  }
  return xs;
}

// ---------------------------------------------------------------------------
// Bentley-Ottmann sweep

struct Segment {
  Point2 left;   // lexicographically smaller endpoint
  Point2 right;
  double slope;  // +inf for vertical segments
};

enum class EventType { End = 0, Cross = 1, Start = 2 };

struct Event {
  Point2 at;
  EventType type;
  std::size_t a;
  std::size_t b;
};

struct EventOrder {
  bool operator()(const Event& x, const Event& y) const {
    if (x.at.x != y.at.x) return x.at.x < y.at.x;
    if (x.at.y != y.at.y) return x.at.y < y.at.y;
    if (x.type != y.type) return x.type < y.type;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

// Orders active segments bottom to top at the current sweep point. Segments
// meeting at the sweep point are ordered as they are just after it, by slope.
// A vertical segment sits at the sweep point's height.
struct StatusOrder {
  const std::vector<Segment>* segments;
  const Point2* sweep;

  double key(const Segment& s) const {
    if (std::isinf(s.slope)) return std::clamp(sweep->y, s.left.y, s.right.y);
    if (sweep->x == s.left.x) return s.left.y;
    if (sweep->x == s.right.x) return s.right.y;
    return s.left.y + (sweep->x - s.left.x) * s.slope;
  }

  bool operator()(std::size_t a, std::size_t b) const {
    if (a == b) return false;
    const Segment& sa = (*segments)[a];
    const Segment& sb = (*segments)[b];
    const double ka = key(sa);
    const double kb = key(sb);
    const double eps = 1e-12 * (1.0 + std::abs(ka) + std::abs(kb));
    if (ka < kb - eps) return true;
    if (ka > kb + eps) return false;
    if (sa.slope != sb.slope) return sa.slope < sb.slope;
    return a < b;
  }
};

class Sweep {
 public:
  Sweep(const ClosedCurve& curve, const Tolerances& tol)
      : curve_(curve), tol_(tol), status_(StatusOrder{&segments_, &sweep_}) {
    const std::size_t n = curve.size();
    segments_.reserve(n);
    handles_.resize(n, status_.end());
    for (std::size_t i = 0; i < n; ++i) {
      Point2 a = curve.edge_start(i);
      Point2 b = curve.edge_end(i);
      if (lex_less(b, a)) std::swap(a, b);
      const double slope =
          a.x == b.x ? std::numeric_limits<double>::infinity() : (b.y - a.y) / (b.x - a.x);
      segments_.push_back({a, b, slope});
      events_.insert({a, EventType::Start, i, i});
      events_.insert({b, EventType::End, i, i});
    }
  }

  std::vector<Intersection> run() {
    while (!events_.empty()) {
      const Event e = *events_.begin();
      events_.erase(events_.begin());
      sweep_ = e.at;
      switch (e.type) {
        case EventType::Start: insert(e.a); break;
        case EventType::End: remove(e.a); break;
        case EventType::Cross: swap(e.a, e.b); break;
      }
    }
    return finalize(std::move(found_), degenerate_, tol_);
  }

 private:
  using Status = std::set<std::size_t, StatusOrder>;

  void insert(std::size_t s) {
    const auto it = status_.insert(s).first;
    handles_[s] = it;
    if (it != status_.begin()) check(*std::prev(it), s);
    if (auto next = std::next(it); next != status_.end()) check(s, *next);
  }

  void remove(std::size_t s) {
    const auto it = handles_[s];
    if (it == status_.end()) return;
    const bool has_below = it != status_.begin();
    const auto next = std::next(it);
    if (has_below && next != status_.end()) check(*std::prev(it), *next);
    status_.erase(it);
    handles_[s] = status_.end();
  }

  void swap(std::size_t a, std::size_t b) {
    status_.erase(handles_[a]);
    status_.erase(handles_[b]);
    handles_[a] = status_.insert(a).first;
    handles_[b] = status_.insert(b).first;
    const bool a_lower = status_.key_comp()(a, b);
    const auto lower = a_lower ? handles_[a] : handles_[b];
    const auto upper = a_lower ? handles_[b] : handles_[a];
    if (lower != status_.begin()) check(*std::prev(lower), *lower);
    if (auto next = std::next(upper); next != status_.end()) check(*upper, *next);
  }

  void check(std::size_t a, std::size_t b) {
    const std::size_t i = std::min(a, b);
    const std::size_t j = std::max(a, b);
    if (detail::edges_adjacent(i, j, curve_.size())) return;
    if (!examined_.insert({i, j}).second) return;
    const PairResult r = detail::classify_pair(curve_, i, j, tol_);
    switch (r.kind) {
      case PairKind::None: return;
      case PairKind::Crossing: {
        found_.push_back(make_intersection(curve_, i, j, r));
        const Point2 at = lex_less(r.point, sweep_) ? sweep_ : r.point;
        events_.insert({at, EventType::Cross, i, j});
        return;
      }
      default: degenerate_.emplace(std::pair{i, j}, r.kind);
    }
  }

  const ClosedCurve& curve_;
  const Tolerances& tol_;
  std::vector<Segment> segments_;
  Point2 sweep_;
  Status status_;
  std::vector<Status::iterator> handles_;
  std::set<Event, EventOrder> events_;
  std::set<std::pair<std::size_t, std::size_t>> examined_;
  Degeneracies degenerate_;
  std::vector<Intersection> found_;
};

}  // namespace

std::vector<Intersection> find_bruteforce(const ClosedCurve& curve, const Tolerances& tol) {
  const std::size_t n = curve.size();
  std::vector<Intersection> xs;
  Degeneracies degenerate;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (detail::edges_adjacent(i, j, n)) continue;
      const PairResult r = detail::classify_pair(curve, i, j, tol);
      if (r.kind == PairKind::Crossing) {
        xs.push_back(make_intersection(curve, i, j, r));
      } else if (r.kind != PairKind::None) {
        degenerate.emplace(std::pair{i, j}, r.kind);
      }
    }
  }
  return finalize(std::move(xs), degenerate, tol);
}

std::vector<Intersection> find_sweep(const ClosedCurve& curve, const Tolerances& tol) {
  return Sweep(curve, tol).run();
}

std::vector<Intersection> find_intersections(const ClosedCurve& curve, Finder finder,
                                             const Tolerances& tol) {
  return finder == Finder::BruteForce ? find_bruteforce(curve, tol) : find_sweep(curve, tol);
}

std::vector<VisitEvent> order_from(const std::vector<Intersection>& intersections, Param base,
                                   std::size_t period, double vertex_gap) {
  const auto n = static_cast<double>(period);
  std::vector<VisitEvent> visits;
  visits.reserve(2 * intersections.size());
  for (std::size_t k = 0; k < intersections.size(); ++k) {
    for (const Param t : {intersections[k].t1, intersections[k].t2}) {
      double d = std::fmod(t - base, n);
      if (d < 0.0) d += n;
      if (std::min(d, n - d) < vertex_gap) {
        throw BaseOnIntersectionError("base parameter coincides with a double point");
      }
      visits.push_back({t, d, k, Visit::Second});
    }
  }
  std::sort(visits.begin(), visits.end(),
            [](const VisitEvent& a, const VisitEvent& b) { return a.distance < b.distance; });
  std::vector<bool> seen(intersections.size(), false);
  for (auto& v : visits) {
    if (!seen[v.intersection]) {
      v.which = Visit::First;
      seen[v.intersection] = true;
    }
  }
  return visits;
}

}  // namespace icurve
