// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/geom/region.hpp"

#include <algorithm>
#include <array>

#include "grid.hpp"
#include "mbl/geom/ops.hpp"

namespace mbl::geom {

namespace {

using detail::Grid;

Grid make_grid(std::initializer_list<const std::vector<Rect>*> sets, double tol) {
  std::vector<const std::vector<Rect>*> v(sets);
  return Grid(std::span<const std::vector<Rect>* const>(v.data(), v.size()), tol);
}

std::vector<Segment> loop_segments(const std::vector<Point>& loop, double tol) {
  Contour c{loop};
  c = remove_collinear(c, tol);
  std::vector<Segment> out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    Point a = c[k];
    Point b = c[(k + 1) % c.size()];
    if (std::tie(b.x, b.y) < std::tie(a.x, a.y)) std::swap(a, b);
    out.push_back({a, b});
  }
  return out;
}

}  // namespace

Region::Region(std::vector<Rect> parts) {
  std::erase_if(parts, [](const Rect& r) { return !(r.length() > 0.0 && r.width() > 0.0); });
  if (parts.size() <= 1) {
    parts_ = std::move(parts);
    return;
  }
  const auto grid = make_grid({&parts}, kDefaultTolerance);
  parts_ = grid.to_rects(grid.rasterize(parts));
}

double Region::area() const {
  double a = 0.0;
  for (const auto& r : parts_) a += r.area();
  return a;
}

Rect Region::bounds() const { return min_bounding_rect(parts_); }

std::optional<Rect> Region::as_rect(double tol) const {
  if (parts_.empty()) return std::nullopt;
  if (parts_.size() == 1) return parts_.front();
  const Rect b = bounds();
  if (std::abs(b.area() - area()) <= tol * (b.length() + b.width())) return b;
  return std::nullopt;
}

Region Region::translated(Point d) const {
  Region out;
  out.parts_.reserve(parts_.size());
  for (const auto& r : parts_) out.parts_.push_back(r.translated(d));
  return out;
}

std::vector<Region> Region::components(double tol) const {
  if (parts_.empty()) return {};
  const auto grid = make_grid({&parts_}, tol);
  std::vector<Region> out;
  for (const auto& m : grid.components(grid.rasterize(parts_))) {
    Region r;
    r.parts_ = grid.to_rects(m);
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Region& a, const Region& b) { return a.area() > b.area(); });
  return out;
}

bool Region::connected(double tol) const { return components(tol).size() <= 1; }

Contour Region::outline(double tol) const {
  if (parts_.empty()) {
    throw GeometryError(GeometryErrorKind::ContractViolation, "outline of an empty region");
  }
  const auto grid = make_grid({&parts_}, tol);
  const auto mask = grid.rasterize(parts_);
  if (grid.components(mask).size() > 1) {
    throw GeometryError(GeometryErrorKind::Disconnected, "region is not edge-connected");
  }
  const auto loops = grid.loops(mask);
  if (loops.size() != 1) {
    throw GeometryError(GeometryErrorKind::HasHole, "region encloses a cavity");
  }
  return remove_collinear(Contour{loops.front()}, tol);
}

std::vector<Segment> Region::boundary(double tol) const {
  if (parts_.empty()) return {};
  const auto grid = make_grid({&parts_}, tol);
  std::vector<Segment> out;
  for (const auto& loop : grid.loops(grid.rasterize(parts_))) {
    auto segs = loop_segments(loop, tol);
    out.insert(out.end(), segs.begin(), segs.end());
  }
  return out;
}

Region Region::unite(const Region& a, const Region& b, double tol) {
  const auto grid = make_grid({&a.parts_, &b.parts_}, tol);
  auto ma = grid.rasterize(a.parts_);
  const auto mb = grid.rasterize(b.parts_);
  for (std::size_t k = 0; k < ma.size(); ++k) ma[k] = static_cast<char>(ma[k] || mb[k]);
  Region r;
  r.parts_ = grid.to_rects(ma);
  return r;
}

Region Region::intersect(const Region& a, const Region& b, double tol) {
  if (a.empty() || b.empty()) return {};
  const auto grid = make_grid({&a.parts_, &b.parts_}, tol);
  auto ma = grid.rasterize(a.parts_);
  const auto mb = grid.rasterize(b.parts_);
  for (std::size_t k = 0; k < ma.size(); ++k) ma[k] = static_cast<char>(ma[k] && mb[k]);
  Region r;
  r.parts_ = grid.to_rects(ma);
  return r;
}

Region Region::subtract(const Region& a, const Region& b, double tol) {
  if (a.empty()) return {};
  if (b.empty()) return a;
  const auto grid = make_grid({&a.parts_, &b.parts_}, tol);
  auto ma = grid.rasterize(a.parts_);
  const auto mb = grid.rasterize(b.parts_);
  for (std::size_t k = 0; k < ma.size(); ++k) ma[k] = static_cast<char>(ma[k] && !mb[k]);
  Region r;
  r.parts_ = grid.to_rects(ma);
  return r;
}

double excess_area(const Region& inner, const Region& outer, double tol) {
  return Region::subtract(inner, outer, tol).area();
}

double overlap_area(const Region& a, const Region& b, double tol) {
  return Region::intersect(a, b, tol).area();
}

std::vector<Segment> shared_boundary(const Region& a, const Region& b, double tol) {
  std::vector<Segment> out;
  const auto sa = a.boundary(tol);
  const auto sb = b.boundary(tol);
  for (const auto& s : sa) {
    for (const auto& t : sb) {
      if (collinear_overlap(s, t, tol) <= tol) continue;
      if (s.horizontal(tol)) {
        const double lo = std::max(s.a.x, t.a.x);
        const double hi = std::min(s.b.x, t.b.x);
        out.push_back({{lo, s.a.y}, {hi, s.a.y}});
      } else {
        const double lo = std::max(s.a.y, t.a.y);
        const double hi = std::min(s.b.y, t.b.y);
        out.push_back({{s.a.x, lo}, {s.a.x, hi}});
      }
    }
  }
  return out;
}

double shared_boundary_length(const Region& a, const Region& b, double tol) {
  double total = 0.0;
  for (const auto& s : shared_boundary(a, b, tol)) total += s.length();
  return total;
}

double perimeter(const Region& r, double tol) {
  double total = 0.0;
  for (const auto& s : r.boundary(tol)) total += s.length();
  return total;
}

}  // namespace mbl::geom
