// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "mbl/geom/ops.hpp"
#include "mbl/geom/region.hpp"
#include "oracles.hpp"

using namespace mbl::geom;

namespace {

Rect R(double x0, double y0, double x1, double y1) { return Rect{{x0, y0}, {x1, y1}}; }

}  // namespace

TEST(RectIou, IdenticalDisjointTouching) {
  EXPECT_DOUBLE_EQ(rect_iou(R(0, 0, 10, 10), R(0, 0, 10, 10)), 1.0);
  EXPECT_DOUBLE_EQ(rect_iou(R(0, 0, 10, 10), R(20, 0, 30, 10)), 0.0);
  EXPECT_DOUBLE_EQ(rect_iou(R(0, 0, 10, 10), R(10, 0, 20, 10)), 0.0);
}

TEST(RectIou, QuarterOverlap) {
  // 5x5 shared out of 100 + 100 - 25
  EXPECT_NEAR(rect_iou(R(0, 0, 10, 10), R(5, 5, 15, 15)), 25.0 / 175.0, 1e-12);
}

TEST(RectIou, AgreesWithRaster) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> pos(0, 6000), ext(100, 8000);
  for (int k = 0; k < 40; ++k) {
    const double ax = pos(rng), ay = pos(rng), bx = ax + pos(rng) % 3000 - 1500, by = ay + pos(rng) % 3000 - 1500;
    const Rect a = R(ax, ay, ax + ext(rng), ay + ext(rng));
    const Rect b = R(bx, by, bx + ext(rng), by + ext(rng));
    EXPECT_NEAR(rect_iou(a, b), mbl::oracle::raster_iou(a, b), 2e-3) << k;
  }
}

TEST(RectIou, ShiftLaw) {
  for (double s : {100.0, 2500.0, 7999.0}) {
    for (double d : {1.0, s / 3, s - 1}) {
      EXPECT_NEAR(rect_iou(R(0, 0, s, 700), R(d, 0, s + d, 700)), (s - d) / (s + d), 1e-12);
      EXPECT_NEAR(rect_iou(R(0, 0, 700, s), R(0, d, 700, s + d)), (s - d) / (s + d), 1e-12);
    }
  }
}

TEST(Contour, ClockwiseOrderOfAnLShape) {
  const std::vector<Point> pts{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
  const auto c = clockwise_order(pts);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c[0], (Point{0, 0}));
  EXPECT_LT(signed_area(c), 0.0);
  EXPECT_DOUBLE_EQ(area(c), 3.0);
  // from the origin a clockwise walk goes north first
  EXPECT_EQ(c[1], (Point{0, 2}));
}

TEST(Contour, ClockwiseOrderRejectsOddVertexCount) {
  const std::vector<Point> pts{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 2}};
  EXPECT_THROW(clockwise_order(pts), GeometryError);
}

TEST(Contour, SnapsNearbyCoordinates) {
  const std::vector<Point> pts{{0, 0}, {10.3, 0.2}, {10, 5}, {0.1, 5.2}};
  const auto c = clockwise_order(pts);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_DOUBLE_EQ(area(c), area(rect_contour(min_bounding_rect(c))));
}

TEST(Contour, ConcaveVertexOfAnLShape) {
  const auto c = clockwise_order(std::vector<Point>{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  int concave = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (is_concave(c, i)) {
      ++concave;
      EXPECT_EQ(c[i], (Point{1, 1}));
    }
  }
  EXPECT_EQ(concave, 1);
}

TEST(Contour, RemoveCollinear) {
  const Contour c{{{0, 0}, {0, 5}, {0, 10}, {10, 10}, {10, 0}, {5, 0}}};
  EXPECT_EQ(remove_collinear(c).size(), 4u);
}

TEST(Region, UnionOfAdjacentRectsIsOneRect) {
  const auto u = Region::unite(Region(R(0, 0, 10, 10)), Region(R(10, 0, 20, 10)));
  EXPECT_DOUBLE_EQ(u.area(), 200.0);
  ASSERT_TRUE(u.as_rect().has_value());
  EXPECT_EQ(*u.as_rect(), R(0, 0, 20, 10));
  EXPECT_EQ(u.outline().size(), 4u);
}

TEST(Region, SubtractLeavesAnL) {
  const auto d = Region::subtract(Region(R(0, 0, 10, 10)), Region(R(5, 5, 10, 10)));
  EXPECT_DOUBLE_EQ(d.area(), 75.0);
  EXPECT_TRUE(d.connected());
  EXPECT_EQ(d.outline().size(), 6u);
}

TEST(Region, SubtractAcrossSplitsInTwo) {
  const auto d = Region::subtract(Region(R(0, 0, 30, 10)), Region(R(10, 0, 20, 10)));
  EXPECT_FALSE(d.connected());
  EXPECT_EQ(d.components().size(), 2u);
}

TEST(Region, OutlineOfRingThrows) {
  const auto ring = Region::subtract(Region(R(0, 0, 30, 30)), Region(R(10, 10, 20, 20)));
  EXPECT_THROW(ring.outline(), GeometryError);
}

TEST(Region, SharedBoundaryAgreesWithSampling) {
  const Region a(R(0, 0, 4000, 3000));
  const Region b(R(4000, 1000, 6000, 5000));
  EXPECT_NEAR(shared_boundary_length(a, b), 2000.0, 1e-9);
  EXPECT_NEAR(mbl::oracle::sampled_shared_length(a.parts(), b.parts()), 2000.0, 2.0);
}

TEST(Region, ExcessAndOverlap) {
  const Region inner(R(-10, 0, 10, 10));
  const Region outer(R(0, 0, 100, 100));
  EXPECT_DOUBLE_EQ(excess_area(inner, outer), 100.0);
  EXPECT_DOUBLE_EQ(overlap_area(inner, outer), 100.0);
  EXPECT_DOUBLE_EQ(perimeter(outer), 400.0);
}

TEST(Segments, CollinearOverlap) {
  EXPECT_DOUBLE_EQ(collinear_overlap({{0, 0}, {10, 0}}, {{5, 0}, {20, 0}}), 5.0);
  EXPECT_DOUBLE_EQ(collinear_overlap({{0, 0}, {10, 0}}, {{5, 1}, {20, 1}}), 0.0);
  EXPECT_DOUBLE_EQ(collinear_overlap({{0, 0}, {0, 10}}, {{0, 10}, {0, 0}}), 10.0);
}
