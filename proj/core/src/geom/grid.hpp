// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "mbl/geom/types.hpp"

namespace mbl::geom::detail {

/// Sorted coordinate list where values closer than the tolerance collapse
/// onto the smallest member of their cluster.
class Axis {
 public:
  Axis() = default;
  Axis(std::vector<double> raw, double tol);

  double snap(double v) const;
  std::size_t index_of(double v) const;  // index into values() of snap(v)
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> raw_;
  std::vector<std::size_t> cluster_;  // raw_ index -> values_ index
  std::vector<double> values_;
};

/// Coordinate-compressed cell grid over a family of rectangle sets.
class Grid {
 public:
  using Mask = std::vector<char>;

  Grid(std::span<const std::vector<Rect>* const> sets, double tol);

  std::size_t nx() const { return xs_.values().empty() ? 0 : xs_.values().size() - 1; }
  std::size_t ny() const { return ys_.values().empty() ? 0 : ys_.values().size() - 1; }
  double x(std::size_t i) const { return xs_.values()[i]; }
  double y(std::size_t j) const { return ys_.values()[j]; }

  Mask rasterize(const std::vector<Rect>& rects) const;
  std::vector<Rect> to_rects(const Mask& mask) const;
  std::vector<Mask> components(const Mask& mask) const;

  /// Closed boundary loops of the mask, clockwise for outer boundaries and
  /// counter-clockwise for cavities. Consecutive collinear vertices kept.
  std::vector<std::vector<Point>> loops(const Mask& mask) const;

  bool at(const Mask& m, long i, long j) const {
    if (i < 0 || j < 0 || i >= static_cast<long>(nx()) || j >= static_cast<long>(ny())) return false;
    return m[static_cast<std::size_t>(j) * nx() + static_cast<std::size_t>(i)] != 0;
  }

 private:
  Axis xs_;
  Axis ys_;
};

}  // namespace mbl::geom::detail
