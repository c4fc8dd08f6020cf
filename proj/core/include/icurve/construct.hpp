#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "icurve/curve.hpp"

namespace icurve {

/// Boundary of an immersed disk with two double points: a thick band that
/// runs once around a rectangle and overlaps its own start along the bottom.
/// The lower half of the bottom bar is covered once and hosts the anchor
/// slots; the overlap above it is covered twice.
struct SeedDiskCurve {
  ClosedCurve curve;
  std::vector<Point2> anchors;  // one per slot, winding number 1
  Point2 m2_anchor;             // winding number 2
};

/// Fixed layout constants. Slot i (1-based) is centred at
/// (slot_spacing * i - slot_spacing / 2, anchor_height).
struct Layout {
  double slot_spacing = 4.0;
  double band_width = 4.0;      // thickness of the band
  double overlap_shift = 2.0;   // vertical offset of the second pass
  double anchor_height = 1.0;
  double hole_radius = 0.5;
  int hole_sides = 24;
  double strip_half_width = 0.125;
};

class PlacementOverlapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CorridorBlockedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CertificationFailedError : public std::runtime_error {
 public:
  CertificationFailedError(std::string field, const std::string& detail)
      : std::runtime_error("certification failed: " + field + ": " + detail),
        field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class GenericityExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Seed curve stretched to host `slots` anchor slots. Requires slots >= 1.
SeedDiskCurve seed_disk_boundary(int slots, const Layout& layout = {});

/// Clockwise regular polygon standing in for a small circle; no vertex sits
/// on the horizontal or vertical axis through the centre.
ClosedCurve hole_boundary(Point2 center, const Layout& layout = {});

/// Seed curve plus g clockwise hole boundaries at the first g anchors.
/// Throws PlacementOverlapError if a hole is not clear of everything else or
/// its centre is not covered exactly once.
CurveSystem excise_disks(const SeedDiskCurve& seed, int g, const Layout& layout = {});

/// Joins component `circle_index` to component 0 through a vertical strip
/// attached to the bottom arc of the circle and to the first strand of the
/// main curve above it. The strip sides cross the top arc of the circle, so
/// the merged curve has two more double points. Throws CorridorBlockedError
/// when the corridor meets anything else.
CurveSystem glue_strip(const CurveSystem& system, std::size_t circle_index,
                       const Layout& layout = {});

/// Boundary of an immersed genus-g surface with exactly 2g + 2 double points.
/// Certified before returning; throws CertificationFailedError otherwise.
ClosedCurve minimal_curve(int g, const Layout& layout = {});

/// c(t) = sum_{k=1..K} decay^k (a_k cos kt + b_k sin kt, c_k cos kt + d_k sin kt)
/// sampled at t_j = 2 pi j / n. For each k the coefficients a_k, b_k, c_k, d_k
/// are drawn in that order as SplitMix64::next_signed() from the state
/// seed XOR (attempt * 0xD1B54A32D192ED03); attempt counts rejections.
struct RandomCurveSpec {
  std::uint64_t seed = 0;
  int modes = 4;
  int samples = 256;
  double decay = 0.7;
};

inline constexpr int kMaxRandomAttempts = 100;

/// Deterministic generic curve. Throws std::invalid_argument for a bad spec
/// and GenericityExhaustedError after kMaxRandomAttempts rejections.
ClosedCurve random_curve(const RandomCurveSpec& spec, const Tolerances& tol = {});

/// Samples attempt `attempt` without validating.
std::vector<Point2> sample_random_curve(const RandomCurveSpec& spec, std::uint64_t attempt);

}  // namespace icurve
