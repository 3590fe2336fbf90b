// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "mbl/geom/types.hpp"

namespace mbl::geom {

Point midpoint(Point a, Point b);
Point midpoint(const Rect& r);

/// True iff p lies in the closed rectangle inflated by tol on every side.
bool point_in_rect(Point p, const Rect& r, double tol = 0.0);

/// Interior-overlap extents of two rectangles (0 when they only touch).
double overlap_area(const Rect& a, const Rect& b);

/// Intersection over union, 0 for disjoint or touching rectangles.
double rect_iou(const Rect& a, const Rect& b);

/// Shoelace area; negative for clockwise vertex order.
double signed_area(const Contour& c);
double area(const Contour& c);

/// Snaps coordinates lying within tol of each other onto a shared value
/// (the smallest of the cluster). Used to straighten almost-parallel edges.
std::vector<Point> snap_to_axis(std::span<const Point> points, double tol = kDefaultTolerance);

/// Orders the vertices of one axis-aligned simple polygon into a clockwise
/// contour starting at the lexicographically smallest vertex.
/// Throws GeometryError(NotRectilinear) if no such ordering exists.
Contour clockwise_order(std::span<const Point> points, double tol = kDefaultTolerance);

/// Drops vertices whose neighbours are collinear with them. Area is preserved.
Contour remove_collinear(const Contour& c, double tol = kDefaultTolerance);

/// Interior angle at vertex_index exceeds 180 degrees. The contour must be
/// clockwise; a straight (180 degree) vertex raises ContractViolation.
bool is_concave(const Contour& c, std::size_t vertex_index, double tol = kDefaultTolerance);

Rect min_bounding_rect(const Contour& c);
Rect min_bounding_rect(std::span<const Rect> rects);

/// Outer boundary of a union of interior-disjoint rectangles: clockwise and
/// collinear-free. Throws Disconnected when the union is not edge-connected
/// and HasHole when it encloses a cavity.
Contour rectilinear_union_outline(std::span<const Rect> rects, double tol = kDefaultTolerance);

Contour rect_contour(const Rect& r);

/// Length of the common part of two collinear axis-aligned segments, 0 when
/// they are not collinear within tol.
double collinear_overlap(const Segment& s, const Segment& t, double tol = kDefaultTolerance);

}  // namespace mbl::geom
