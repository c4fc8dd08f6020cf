#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

namespace icurve {
namespace {

using testing::curves_meet;
using testing::winding_by_angle_sum;

std::size_t self_intersections(const CurveSystem& s) {
  std::size_t total = 0;
  for (const ClosedCurve& c : s.components) total += find_bruteforce(c).size();
  return total;
}

TEST(SplitMix, GoldenValues) {
  SplitMix64 zero(0);
  EXPECT_EQ(zero.next(), 0xe220a8397b1dcdafULL);
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.next(), 3203168211198807973ULL);
}

TEST(SplitMix, UnitAndSignedRanges) {
  SplitMix64 rng(99);
  for (int k = 0; k < 10000; ++k) {
    const double u = rng.next_unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const double s = rng.next_signed();
    EXPECT_GE(s, -1.0);
    EXPECT_LT(s, 1.0);
  }
}

TEST(SeedDisk, GenusOneSlot) {
  const SeedDiskCurve seed = seed_disk_boundary(1);
  const WhitneyReport r = analyze(seed.curve);
  EXPECT_EQ(r.total(), 2);
  EXPECT_EQ(r.index, 1);
  EXPECT_EQ(r.base.mu, 1);
  EXPECT_EQ(r.n_plus, 1);
  EXPECT_EQ(r.n_minus, 1);
  ASSERT_EQ(seed.anchors.size(), 1u);
  EXPECT_EQ(winding_number(seed.curve, seed.anchors[0]), 1);
  EXPECT_EQ(winding_by_angle_sum(seed.curve, seed.anchors[0]), 1);
  EXPECT_EQ(winding_number(seed.curve, seed.m2_anchor), 2);
  EXPECT_EQ(winding_by_angle_sum(seed.curve, seed.m2_anchor), 2);
}

TEST(SeedDisk, FiveSlots) {
  const SeedDiskCurve seed = seed_disk_boundary(5);
  const WhitneyReport r = analyze(seed.curve);
  EXPECT_EQ(r.total(), 2);
  EXPECT_EQ(r.index, 1);
  ASSERT_EQ(seed.anchors.size(), 5u);
  for (Point2 a : seed.anchors) {
    EXPECT_EQ(winding_number(seed.curve, a), 1);
    EXPECT_EQ(winding_by_angle_sum(seed.curve, a), 1);
  }
  EXPECT_EQ(winding_by_angle_sum(seed.curve, seed.m2_anchor), 2);
}

TEST(SeedDisk, Deterministic) {
  EXPECT_EQ(seed_disk_boundary(3).curve, seed_disk_boundary(3).curve);
  EXPECT_THROW(seed_disk_boundary(0), std::invalid_argument);
}

TEST(HoleBoundary, ClockwiseSmallPolygon) {
  const ClosedCurve h = hole_boundary({2.0, 1.0});
  EXPECT_EQ(rotation_index(h), -1);
  EXPECT_EQ(h.size(), 24u);
  EXPECT_EQ(winding_number(h, {2.0, 1.0}), -1);
  for (Point2 p : h.vertices()) {
    EXPECT_NEAR(distance(p, {2.0, 1.0}), 0.5, 1e-12);
    EXPECT_NE(p.x, 2.0);
    EXPECT_NE(p.y, 1.0);
  }
}

TEST(ExciseDisks, OneHole) {
  const CurveSystem s = excise_disks(seed_disk_boundary(1), 1);
  ASSERT_EQ(s.components.size(), 2u);
  EXPECT_EQ(rotation_index(s.components[1]), -1);
  EXPECT_FALSE(curves_meet(s.components[0], s.components[1]));
}

TEST(ExciseDisks, ThreeHolesAreDisjoint) {
  const SeedDiskCurve seed = seed_disk_boundary(3);
  const CurveSystem s = excise_disks(seed, 3);
  ASSERT_EQ(s.components.size(), 4u);
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (i > 0) {
      EXPECT_EQ(rotation_index(s.components[i]), -1);
    }
    for (std::size_t j = i + 1; j < s.components.size(); ++j) {
      EXPECT_FALSE(curves_meet(s.components[i], s.components[j])) << i << " " << j;
    }
  }
}

TEST(ExciseDisks, FewerHolesThanSlots) {
  const CurveSystem s = excise_disks(seed_disk_boundary(6), 2);
  EXPECT_EQ(s.components.size(), 3u);
  EXPECT_THROW(excise_disks(seed_disk_boundary(2), 3), std::invalid_argument);
  EXPECT_THROW(excise_disks(seed_disk_boundary(2), 0), std::invalid_argument);
}

TEST(ExciseDisks, OversizedHoleOverlaps) {
  Layout big;
  big.hole_radius = 1.5;
  EXPECT_THROW(excise_disks(seed_disk_boundary(2, big), 2, big), PlacementOverlapError);
}

TEST(GlueStrip, GenusOne) {
  const CurveSystem s = excise_disks(seed_disk_boundary(1), 1);
  const CurveSystem glued = glue_strip(s, 1);
  ASSERT_EQ(glued.components.size(), 1u);
  EXPECT_EQ(find_bruteforce(glued.components[0]).size(), 4u);
  EXPECT_EQ(rotation_index(glued.components[0]), -1);
}

TEST(GlueStrip, ConservationAlongThePipeline) {
  for (int g = 1; g <= 10; ++g) {
    CurveSystem s = excise_disks(seed_disk_boundary(g), g);
    for (int k = 0; k <= g; ++k) {
      EXPECT_EQ(s.components.size(), static_cast<std::size_t>(g + 1 - k)) << g << " " << k;
      EXPECT_EQ(self_intersections(s), static_cast<std::size_t>(2 + 2 * k)) << g << " " << k;
      for (std::size_t c = 1; c < s.components.size(); ++c) {
        EXPECT_FALSE(curves_meet(s.components[0], s.components[c]));
      }
      if (k < g) s = glue_strip(s, 1);
    }
    EXPECT_EQ(rotation_index(s.components[0]), 1 - 2 * g);
  }
}

TEST(GlueStrip, BadArguments) {
  const CurveSystem s = excise_disks(seed_disk_boundary(2), 2);
  EXPECT_THROW(glue_strip(s, 0), std::invalid_argument);
  EXPECT_THROW(glue_strip(s, 3), std::invalid_argument);
  CurveSystem ccw = s;
  ccw.components[1] = reversed(ccw.components[1]);
  EXPECT_THROW(glue_strip(ccw, 1), CorridorBlockedError);
}

TEST(GlueStrip, BlockedCorridor) {
  // A second hole placed straight above the first sits in its corridor.
  CurveSystem s = excise_disks(seed_disk_boundary(1), 1);
  const Point2 c = seed_disk_boundary(1).anchors[0];
  Layout small;
  small.hole_radius = 0.2;
  s.components.push_back(hole_boundary({c.x, c.y + 0.75}, small));
  EXPECT_THROW(glue_strip(s, 1), CorridorBlockedError);
}

TEST(MinimalCurve, Certified) {
  for (int g = 1; g <= 10; ++g) {
    const ClosedCurve c = minimal_curve(g);
    EXPECT_FALSE(validate(c).has_value());
    const WhitneyReport r = analyze(c);
    EXPECT_EQ(r.total(), 2 * g + 2);
    EXPECT_EQ(r.index, 1 - 2 * g);
    EXPECT_EQ(r.base.mu, 1);
    EXPECT_EQ(r.n_plus, 1);
    EXPECT_EQ(r.n_minus, 2 * g + 1);
    EXPECT_TRUE(r.boundary_conditions.first_intersection_positive);
  }
}

TEST(MinimalCurve, Examples) {
  EXPECT_EQ(find_bruteforce(minimal_curve(1)).size(), 4u);
  EXPECT_EQ(rotation_index(minimal_curve(2)), -3);
  EXPECT_EQ(find_bruteforce(minimal_curve(2)).size(), 6u);
  EXPECT_EQ(rotation_index(minimal_curve(10)), -19);
  EXPECT_EQ(find_bruteforce(minimal_curve(10)).size(), 22u);
}

TEST(MinimalCurve, DeterministicAndRejectsGenusZero) {
  EXPECT_EQ(minimal_curve(4), minimal_curve(4));
  EXPECT_THROW(minimal_curve(0), std::invalid_argument);
}

TEST(MinimalCurve, BadLayoutFailsLoudly) {
  Layout cramped;
  cramped.slot_spacing = 0.8;  // neighbouring holes overlap
  EXPECT_THROW(minimal_curve(2, cramped), PlacementOverlapError);
}

TEST(RandomCurve, Deterministic) {
  const RandomCurveSpec spec{42, 4, 256, 0.7};
  const ClosedCurve a = random_curve(spec);
  const ClosedCurve b = random_curve(spec);
  ASSERT_EQ(a.size(), 256u);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, random_curve({43, 4, 256, 0.7}));
}

TEST(RandomCurve, SingleModeIsAnEllipse) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ClosedCurve c = random_curve({seed, 1, 256, 0.7});
    EXPECT_EQ(std::abs(rotation_index(c)), 1);
    EXPECT_TRUE(find_bruteforce(c).empty());
  }
}

TEST(RandomCurve, FirstAttemptMatchesSampler) {
  const RandomCurveSpec spec{7, 3, 128, 1.0};
  const auto v = sample_random_curve(spec, 0);
  const ClosedCurve c = random_curve(spec);
  if (!validate(ClosedCurve::from_vertices(v)).has_value()) {
    EXPECT_EQ(c.vertices()[0], v[0]);
  }
}

TEST(RandomCurve, SamplerFollowsTheDocumentedFormula) {
  const RandomCurveSpec spec{5, 2, 64, 0.5};
  SplitMix64 rng(spec.seed);
  double a[3], b[3], c[3], d[3];
  for (int k = 1; k <= 2; ++k) {
    a[k] = rng.next_signed();
    b[k] = rng.next_signed();
    c[k] = rng.next_signed();
    d[k] = rng.next_signed();
  }
  const auto v = sample_random_curve(spec, 0);
  for (int j : {0, 9, 33}) {
    const double t = 2.0 * std::numbers::pi * j / 64;
    double x = 0, y = 0;
    for (int k = 1; k <= 2; ++k) {
      const double amp = std::pow(0.5, k);
      x += amp * (a[k] * std::cos(k * t) + b[k] * std::sin(k * t));
      y += amp * (c[k] * std::cos(k * t) + d[k] * std::sin(k * t));
    }
    EXPECT_NEAR(v[j].x, x, 1e-14);
    EXPECT_NEAR(v[j].y, y, 1e-14);
  }
}

TEST(RandomCurve, AcceptedCurvesAreValid) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_FALSE(validate(testing::fuzz_curve(seed)).has_value());
  }
}

TEST(RandomCurve, BadSpecAndExhaustion) {
  EXPECT_THROW(random_curve({1, 0, 256, 0.7}), std::invalid_argument);
  EXPECT_THROW(random_curve({1, 3, 32, 0.7}), std::invalid_argument);
  EXPECT_THROW(random_curve({1, 3, 256, 0.0}), std::invalid_argument);
  Tolerances impossible;
  impossible.edge = 1e6;
  EXPECT_THROW(random_curve({1, 3, 256, 0.7}, impossible), GenericityExhaustedError);
}

}  // namespace
}  // namespace icurve
