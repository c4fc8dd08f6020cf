#pragma once

#include <optional>
#include <vector>

#include "icurve/curve.hpp"
#include "icurve/intersect.hpp"

namespace icurve {

/// Lowest point of the curve and the direction it is passed in.
/// mu = +1 when the curve moves in +x there, -1 when it moves in -x.
struct BasePoint {
  Param param = 0.0;
  Point2 location;
  int mu = 1;
};

struct SignedIntersection {
  Intersection base;
  int sign = 1;
  Param first_visit_param = 0.0;  // parameter distance from the base point
};

/// Which way the sign of a double point is read off its two tangents.
/// Standard: positive iff the first-visited tangent v1 is a counterclockwise
/// rotation (by less than pi) of the second, cross(v2, v1) > 0.
/// Flipped exists only so tests can show the identity is sensitive to it.
enum class SignConvention { Standard, Flipped };

/// Necessary conditions for the curve to bound an immersed surface of genus
/// candidate_genus. They are not sufficient.
struct BoundaryConditions {
  bool index_is_1_minus_2g = false;
  bool mu_is_plus_one = false;
  bool first_intersection_positive = false;
  bool count_at_least_2g_plus_2 = false;

  bool all() const {
    return index_is_1_minus_2g && mu_is_plus_one && first_intersection_positive &&
           count_at_least_2g_plus_2;
  }
};

struct WhitneyReport {
  int index = 0;
  BasePoint base;
  int n_plus = 0;
  int n_minus = 0;
  bool identity_holds = false;
  std::optional<int> candidate_genus;
  BoundaryConditions boundary_conditions;
  std::vector<SignedIntersection> intersections;  // in order of first visit

  int total() const { return n_plus + n_minus; }
};

/// Throws GenericityError(AmbiguousMinimum) when the minimum is neither a
/// unique vertex nor a unique horizontal bottom edge, or when the base
/// parameter would sit on a double point of `xs`.
BasePoint base_point(const ClosedCurve& curve, const std::vector<Intersection>& xs,
                     const Tolerances& tol = {});
BasePoint base_point(const ClosedCurve& curve, const Tolerances& tol = {});

std::vector<SignedIntersection> sign_intersections(
    const ClosedCurve& curve, const BasePoint& base, const std::vector<Intersection>& xs,
    SignConvention convention = SignConvention::Standard, const Tolerances& tol = {});

struct AnalyzeOptions {
  Finder finder = Finder::Sweep;
  SignConvention convention = SignConvention::Standard;
  Tolerances tol;
};

/// Validates the curve (throwing the first GenericityError) and fills every
/// report field from independently computed index and signed counts.
WhitneyReport analyze(const ClosedCurve& curve, const AnalyzeOptions& options = {});

}  // namespace icurve
