// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mbl/geom/types.hpp"

namespace mbl::geom {

/// A planar set stored as interior-disjoint rectangles. Boolean operations
/// run on a coordinate-compressed grid whose coordinates are merged when
/// they lie within the tolerance of each other.
class Region {
 public:
  Region() = default;
  explicit Region(const Rect& r) : parts_{r} {}
  explicit Region(std::vector<Rect> parts);

  const std::vector<Rect>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  double area() const;
  Rect bounds() const;

  /// The region as one rectangle, if it is one.
  std::optional<Rect> as_rect(double tol = kDefaultTolerance) const;

  Region translated(Point d) const;

  /// Edge-connected components, largest area first.
  std::vector<Region> components(double tol = kDefaultTolerance) const;
  bool connected(double tol = kDefaultTolerance) const;

  /// Clockwise outer outline; see rectilinear_union_outline for errors.
  Contour outline(double tol = kDefaultTolerance) const;

  /// Maximal boundary segments (every component, every loop).
  std::vector<Segment> boundary(double tol = kDefaultTolerance) const;

  static Region unite(const Region& a, const Region& b, double tol = kDefaultTolerance);
  static Region intersect(const Region& a, const Region& b, double tol = kDefaultTolerance);
  static Region subtract(const Region& a, const Region& b, double tol = kDefaultTolerance);

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<Rect> parts_;
};

/// Area of `inner` lying outside `outer`.
double excess_area(const Region& inner, const Region& outer, double tol = kDefaultTolerance);

/// Interior overlap area of two regions.
double overlap_area(const Region& a, const Region& b, double tol = kDefaultTolerance);

/// Length of boundary the two regions share (their interiors are assumed
/// disjoint). Corner contact contributes nothing.
double shared_boundary_length(const Region& a, const Region& b, double tol = kDefaultTolerance);

/// Segments of the boundary the two regions share.
std::vector<Segment> shared_boundary(const Region& a, const Region& b,
                                     double tol = kDefaultTolerance);

/// Sum of edge lengths over all boundary loops.
double perimeter(const Region& r, double tol = kDefaultTolerance);

}  // namespace mbl::geom
