#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "icurve/curve.hpp"

namespace icurve {

/// One transverse double point. `t1 < t2`; dir1/dir2 are the unit tangents
/// of the strands through the point at those parameters.
struct Intersection {
  Param t1 = 0.0;
  Param t2 = 0.0;
  Point2 point;
  Vec2 dir1;
  Vec2 dir2;
};

/// Every proper crossing between non-adjacent edges, checked pair by pair.
/// This is the reference definition; find_sweep must agree with it.
/// Sorted by (t1, t2). Throws GenericityError for touching, overlapping,
/// near-vertex or near-coincident crossings.
std::vector<Intersection> find_bruteforce(const ClosedCurve& curve, const Tolerances& tol = {});

/// Same result as find_bruteforce, computed with a Bentley-Ottmann plane sweep
/// in lexicographic (x, y) order.
std::vector<Intersection> find_sweep(const ClosedCurve& curve, const Tolerances& tol = {});

enum class Finder { BruteForce, Sweep };

std::vector<Intersection> find_intersections(const ClosedCurve& curve, Finder finder,
                                             const Tolerances& tol = {});

enum class Visit { First, Second };

struct VisitEvent {
  Param param = 0.0;
  double distance = 0.0;  // cyclic parameter distance from the base
  std::size_t intersection = 0;
  Visit which = Visit::First;
};

class BaseOnIntersectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The 2k visits to the k double points met while walking the curve once
/// forward from `base`. `period` is the vertex count of the curve. Throws
/// BaseOnIntersectionError when base lies within `vertex_gap` of a visit.
std::vector<VisitEvent> order_from(const std::vector<Intersection>& intersections, Param base,
                                   std::size_t period, double vertex_gap = Tolerances{}.vertex_gap);

namespace detail {

enum class PairKind { None, Crossing, NonTransverse, NearVertex };

struct PairResult {
  PairKind kind = PairKind::None;
  double s = 0.0;  // fraction along the first edge
  double u = 0.0;  // fraction along the second edge
  Point2 point;
};

/// Classifies edges i < j of the curve. Adjacent edges are never passed in.
PairResult classify_pair(const ClosedCurve& curve, std::size_t i, std::size_t j,
                         const Tolerances& tol);

bool edges_adjacent(std::size_t i, std::size_t j, std::size_t n);

}  // namespace detail

}  // namespace icurve
