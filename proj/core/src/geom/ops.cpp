// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/geom/ops.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "grid.hpp"
#include "mbl/geom/region.hpp"

namespace mbl::geom {

const char* to_string(GeometryErrorKind kind) {
  switch (kind) {
    case GeometryErrorKind::NotRectilinear: return "not-rectilinear";
    case GeometryErrorKind::Disconnected: return "disconnected";
    case GeometryErrorKind::HasHole: return "has-hole";
    case GeometryErrorKind::ContractViolation: return "contract-violation";
  }
  return "unknown";
}

Point midpoint(Point a, Point b) { return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0}; }

Point midpoint(const Rect& r) { return r.center(); }

bool point_in_rect(Point p, const Rect& r, double tol) {
  return p.x >= r.min.x - tol && p.x <= r.max.x + tol && p.y >= r.min.y - tol &&
         p.y <= r.max.y + tol;
}

double overlap_area(const Rect& a, const Rect& b) {
  const double w = std::min(a.max.x, b.max.x) - std::max(a.min.x, b.min.x);
  const double h = std::min(a.max.y, b.max.y) - std::max(a.min.y, b.min.y);
  if (w <= 0.0 || h <= 0.0) return 0.0;
  return w * h;
}

double rect_iou(const Rect& a, const Rect& b) {
  const double inter = overlap_area(a, b);
  if (inter <= 0.0) return 0.0;
  const double uni = a.area() + b.area() - inter;
  if (uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

double signed_area(const Contour& c) {
  double s = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Point& p = c[k];
    const Point& q = c[(k + 1) % c.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s / 2.0;
}

double area(const Contour& c) { return std::abs(signed_area(c)); }

std::vector<Point> snap_to_axis(std::span<const Point> points, double tol) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& p : points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  const detail::Axis ax(xs, tol);
  const detail::Axis ay(ys, tol);
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back({ax.snap(p.x), ay.snap(p.y)});
  return out;
}

namespace {

bool lex_less(Point a, Point b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); }

Contour start_at_smallest(std::vector<Point> v) {
  if (v.empty()) return {};
  const auto it = std::min_element(v.begin(), v.end(), lex_less);
  std::rotate(v.begin(), it, v.end());
  return Contour{std::move(v)};
}

[[noreturn]] void not_rectilinear(const char* why) {
  throw GeometryError(GeometryErrorKind::NotRectilinear, why);
}

}  // namespace

Contour clockwise_order(std::span<const Point> input, double tol) {
  auto pts = snap_to_axis(input, tol);
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 4 || n % 2 != 0) not_rectilinear("an axis-aligned polygon needs an even number >= 4 of vertices");

  // Vertices on a common vertical (horizontal) line pair up in sorted order.
  std::vector<std::size_t> vpartner(n);
  std::vector<std::size_t> hpartner(n);
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;

  auto pair_up = [&](auto key_line, auto key_along, std::vector<std::size_t>& partner) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::make_pair(key_line(pts[a]), key_along(pts[a])) <
             std::make_pair(key_line(pts[b]), key_along(pts[b]));
    });
    std::size_t k = 0;
    while (k < n) {
      std::size_t e = k;
      while (e < n && key_line(pts[order[e]]) == key_line(pts[order[k]])) ++e;
      if ((e - k) % 2 != 0) not_rectilinear("odd number of vertices on an axis line");
      for (std::size_t m = k; m < e; m += 2) {
        partner[order[m]] = order[m + 1];
        partner[order[m + 1]] = order[m];
      }
      k = e;
    }
  };
  pair_up([](Point p) { return p.x; }, [](Point p) { return p.y; }, vpartner);
  pair_up([](Point p) { return p.y; }, [](Point p) { return p.x; }, hpartner);

  std::vector<Point> ring;
  std::vector<char> seen(n, 0);
  std::size_t cur = 0;  // lexicographically smallest after the sort
  bool vertical = true;
  for (std::size_t step = 0; step < n; ++step) {
    if (seen[cur]) not_rectilinear("vertices form more than one cycle");
    seen[cur] = 1;
    ring.push_back(pts[cur]);
    cur = vertical ? vpartner[cur] : hpartner[cur];
    vertical = !vertical;
  }
  if (cur != 0) not_rectilinear("vertices do not close into a single cycle");

  // Reject self-intersections: a horizontal edge crossing a vertical edge's interior.
  for (std::size_t a = 0; a < n; ++a) {
    const Point p = ring[a];
    const Point q = ring[(a + 1) % n];
    if (p.x != q.x) continue;
    const double ylo = std::min(p.y, q.y), yhi = std::max(p.y, q.y);
    for (std::size_t b = 0; b < n; ++b) {
      const Point r = ring[b];
      const Point s = ring[(b + 1) % n];
      if (r.y != s.y) continue;
      const double xlo = std::min(r.x, s.x), xhi = std::max(r.x, s.x);
      if (p.x > xlo && p.x < xhi && r.y > ylo && r.y < yhi) not_rectilinear("edges cross");
    }
  }

  Contour c{ring};
  if (signed_area(c) > 0.0) {
    std::reverse(ring.begin() + 1, ring.end());
  }
  return start_at_smallest(std::move(ring));
}

Contour remove_collinear(const Contour& c, double tol) {
  std::vector<Point> v = c.vertices;
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t k = 0; k < v.size() && v.size() >= 3; ++k) {
      const Point& prev = v[(k + v.size() - 1) % v.size()];
      const Point& cur = v[k];
      const Point& next = v[(k + 1) % v.size()];
      const bool dup = near(prev, cur, tol);
      const bool same_x = std::abs(prev.x - cur.x) <= tol && std::abs(cur.x - next.x) <= tol;
      const bool same_y = std::abs(prev.y - cur.y) <= tol && std::abs(cur.y - next.y) <= tol;
      if (dup || same_x || same_y) {
        v.erase(v.begin() + static_cast<long>(k));
        changed = true;
        break;
      }
    }
  }
  return start_at_smallest(std::move(v));
}

bool is_concave(const Contour& c, std::size_t i, double tol) {
  const std::size_t n = c.size();
  if (n < 4 || i >= n) {
    throw GeometryError(GeometryErrorKind::ContractViolation, "vertex index out of range");
  }
  const Point prev = c[(i + n - 1) % n];
  const Point cur = c[i];
  const Point next = c[(i + 1) % n];
  const double dx1 = cur.x - prev.x, dy1 = cur.y - prev.y;
  const double dx2 = next.x - cur.x, dy2 = next.y - cur.y;
  const double cross = dx1 * dy2 - dy1 * dx2;
  const double scale = (std::abs(dx1) + std::abs(dy1)) * (std::abs(dx2) + std::abs(dy2));
  if (std::abs(cross) <= tol * std::sqrt(scale)) {
    throw GeometryError(GeometryErrorKind::ContractViolation, "straight vertex; remove collinear points first");
  }
  // Clockwise traversal: convex corners turn right (negative cross product).
  return cross > 0.0;
}

Rect min_bounding_rect(const Contour& c) {
  if (c.empty()) return {};
  Rect r{c[0], c[0]};
  for (const auto& p : c.vertices) {
    r.min.x = std::min(r.min.x, p.x);
    r.min.y = std::min(r.min.y, p.y);
    r.max.x = std::max(r.max.x, p.x);
    r.max.y = std::max(r.max.y, p.y);
  }
  return r;
}

Rect min_bounding_rect(std::span<const Rect> rects) {
  if (rects.empty()) return {};
  Rect r = rects.front();
  for (const auto& q : rects) {
    r.min.x = std::min(r.min.x, q.min.x);
    r.min.y = std::min(r.min.y, q.min.y);
    r.max.x = std::max(r.max.x, q.max.x);
    r.max.y = std::max(r.max.y, q.max.y);
  }
  return r;
}

Contour rectilinear_union_outline(std::span<const Rect> rects, double tol) {
  return Region(std::vector<Rect>(rects.begin(), rects.end())).outline(tol);
}

Contour rect_contour(const Rect& r) {
  return Contour{{r.min, {r.min.x, r.max.y}, r.max, {r.max.x, r.min.y}}};
}

double collinear_overlap(const Segment& s, const Segment& t, double tol) {
  const bool sh = s.horizontal(tol);
  const bool th = t.horizontal(tol);
  const bool sv = std::abs(s.a.x - s.b.x) <= tol;
  const bool tv = std::abs(t.a.x - t.b.x) <= tol;
  if (sh && th && std::abs(s.a.y - t.a.y) <= tol) {
    const double lo = std::max(std::min(s.a.x, s.b.x), std::min(t.a.x, t.b.x));
    const double hi = std::min(std::max(s.a.x, s.b.x), std::max(t.a.x, t.b.x));
    return std::max(0.0, hi - lo);
  }
  if (sv && tv && std::abs(s.a.x - t.a.x) <= tol) {
    const double lo = std::max(std::min(s.a.y, s.b.y), std::min(t.a.y, t.b.y));
    const double hi = std::min(std::max(s.a.y, s.b.y), std::max(t.a.y, t.b.y));
    return std::max(0.0, hi - lo);
  }
  return 0.0;
}

}  // namespace mbl::geom
