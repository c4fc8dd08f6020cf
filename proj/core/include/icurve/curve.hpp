#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icurve/geometry.hpp"

namespace icurve {

/// Curve parameter: edge index plus fraction along that edge, in [0, n).
using Param = double;

/// Genericity thresholds. Lengths are in curve units, `vertex_gap` is in
/// parameter units, angles in radians.
struct Tolerances {
  double edge = 1e-9;        // minimum edge length
  double turn = 1e-6;        // turning angles must stay this far from +-pi
  double angle = 1e-6;       // minimum crossing angle
  double separation = 1e-9;  // minimum distance between double points
  double vertex_gap = 1e-6;  // minimum parameter distance crossing -> vertex
  double min_margin = 1e-9;  // y-minimum must beat other vertices by this
};

enum class GenericityKind {
  TooFewVertices,
  ZeroLengthEdge,
  ReversalVertex,
  NonTransverseCrossing,
  NearTriplePoint,
  CrossingNearVertex,
  AmbiguousMinimum,
};

std::string_view to_string(GenericityKind kind);

/// The first genericity clause a curve violates. `where` holds the edge or
/// vertex indices (or parameters) involved.
class GenericityError : public std::runtime_error {
 public:
  GenericityError(GenericityKind kind, std::vector<double> where, const std::string& detail);

  GenericityKind kind() const noexcept { return kind_; }
  const std::vector<double>& where() const noexcept { return where_; }

 private:
  GenericityKind kind_;
  std::vector<double> where_;
};

class PointOnCurveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Oriented closed polyline. Edge i runs from vertex i to vertex (i+1) mod n.
///
/// Construction enforces the structural immersion invariants: at least three
/// vertices, finite coordinates, no short edges and no reversal at any vertex.
/// Self-intersection genericity is checked separately by validate().
class ClosedCurve {
 public:
  /// Throws GenericityError for structural violations and
  /// std::invalid_argument for non-finite coordinates.
  static ClosedCurve from_vertices(std::vector<Point2> vertices, const Tolerances& tol = {});

  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const Point2> vertices() const noexcept { return vertices_; }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  Point2 edge_start(std::size_t i) const { return vertex(i); }
  Point2 edge_end(std::size_t i) const { return vertex(i + 1); }
  Vec2 edge_vector(std::size_t i) const { return edge_end(i) - edge_start(i); }

  /// Point at parameter t (taken modulo n).
  Point2 evaluate(Param t) const;
  /// Unit tangent of the edge containing parameter t.
  Vec2 tangent(Param t) const;

  friend bool operator==(const ClosedCurve&, const ClosedCurve&) = default;

 private:
  explicit ClosedCurve(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {}

  std::vector<Point2> vertices_;
};

/// Disjoint union of closed curves. Component 0 is the main curve in the
/// surgery pipeline.
struct CurveSystem {
  std::vector<ClosedCurve> components;
};

/// Structural checks only (vertex count, edge lengths, reversals); returns the
/// first violation.
std::optional<GenericityError> check_structure(std::span<const Point2> vertices,
                                               const Tolerances& tol = {});

/// Full genericity check: structure, transverse well-separated crossings away
/// from vertices, and a well-defined y-minimum. Returns the first violation in
/// that clause order, lowest index first within a clause.
std::optional<GenericityError> validate(const ClosedCurve& curve, const Tolerances& tol = {});

/// Signed angle in (-pi, pi] from the incoming to the outgoing edge at vertex i.
/// Throws std::out_of_range for an invalid index.
double turning_angle(const ClosedCurve& curve, std::size_t vertex_index);

/// Total turning divided by 2*pi. Throws std::logic_error when the sum is not
/// within 1e-6 of an integer, which only happens on numerical corruption.
int rotation_index(const ClosedCurve& curve);

/// Number of counterclockwise turns of the curve around `point`. Throws
/// PointOnCurveError when the point lies within tol.separation of the curve.
int winding_number(const ClosedCurve& curve, Point2 point, const Tolerances& tol = {});

double distance_to_curve(const ClosedCurve& curve, Point2 point);

// Transforms. All keep vertex 0 in place as the first vertex where possible,
// so parameters map predictably.

/// Opposite orientation; parameter t maps to n - t.
ClosedCurve reversed(const ClosedCurve& curve);
/// Negates x coordinates.
ClosedCurve mirror_x(const ClosedCurve& curve);
/// Rotation about the origin by `angle`, then uniform scale, then translation.
ClosedCurve transformed(const ClosedCurve& curve, double angle, double scale, Vec2 shift);
/// Inserts every edge midpoint; parameter t maps to 2t.
ClosedCurve refined(const ClosedCurve& curve);

}  // namespace icurve
