// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbl::geom {

/// Coincidence / containment tolerance in millimetres.
inline constexpr double kDefaultTolerance = 0.5;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

inline bool near(Point a, Point b, double tol) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

/// Axis-aligned rectangle stored by its bottom-left and top-right corners.
/// The bottom-left corner plus (length, width) is the external view: length
/// is the X extent and width the Y extent.
struct Rect {
  Point min;
  Point max;

  static Rect from_extent(Point anchor, double length, double width) {
    return Rect{anchor, {anchor.x + length, anchor.y + width}};
  }

  double length() const { return max.x - min.x; }
  double width() const { return max.y - min.y; }
  double area() const { return length() * width(); }
  Point center() const { return {(min.x + max.x) / 2.0, (min.y + max.y) / 2.0}; }
  bool valid() const {
    return std::isfinite(min.x) && std::isfinite(min.y) && std::isfinite(max.x) &&
           std::isfinite(max.y) && length() > 0.0 && width() > 0.0;
  }

  Rect translated(Point d) const { return Rect{min + d, max + d}; }
  Rect inflated(double by) const {
    return Rect{{min.x - by, min.y - by}, {max.x + by, max.y + by}};
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

inline bool near(const Rect& a, const Rect& b, double tol) {
  return near(a.min, b.min, tol) && near(a.max, b.max, tol);
}

/// Closed rectilinear polygon. After normalization the vertices run
/// clockwise starting from the lexicographically smallest vertex.
struct Contour {
  std::vector<Point> vertices;

  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
  const Point& operator[](std::size_t i) const { return vertices[i]; }

  friend bool operator==(const Contour&, const Contour&) = default;
};

/// Axis-aligned segment, a < b along its axis.
struct Segment {
  Point a;
  Point b;

  bool horizontal(double tol = kDefaultTolerance) const { return std::abs(a.y - b.y) <= tol; }
  double length() const { return std::abs(b.x - a.x) + std::abs(b.y - a.y); }
  Point midpoint() const { return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0}; }
};

enum class GeometryErrorKind { NotRectilinear, Disconnected, HasHole, ContractViolation };

const char* to_string(GeometryErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(GeometryErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  GeometryErrorKind kind() const { return kind_; }

 private:
  GeometryErrorKind kind_;
};

}  // namespace mbl::geom
