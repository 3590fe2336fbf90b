// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace mbl::oracle {

namespace {

// pixel k covers [k, k+1); its centre is k + 0.5
long covered(double lo, double hi) {
  const long first = static_cast<long>(std::ceil(lo - 0.5));
  const long last = static_cast<long>(std::floor(hi - 0.5 - 1e-9));
  return std::max(0L, last - first + 1);
}

bool inside(const std::vector<geom::Rect>& rs, double x, double y) {
  for (const auto& r : rs) {
    if (x > r.min.x && x < r.max.x && y > r.min.y && y < r.max.y) return true;
  }
  return false;
}

struct Probe {
  double x, y;
};

// Probe points on the common boundary, one per mm of its length.
std::vector<Probe> shared_probes(const std::vector<geom::Rect>& a, const std::vector<geom::Rect>& b) {
  std::set<double> xs, ys;
  double x0 = 1e18, x1 = -1e18, y0 = 1e18, y1 = -1e18;
  for (const auto* set : {&a, &b}) {
    for (const auto& r : *set) {
      xs.insert(r.min.x), xs.insert(r.max.x), ys.insert(r.min.y), ys.insert(r.max.y);
      x0 = std::min(x0, r.min.x), x1 = std::max(x1, r.max.x), y0 = std::min(y0, r.min.y), y1 = std::max(y1, r.max.y);
    }
  }
  const double e = 0.25;
  std::vector<Probe> out;
  for (double x : xs) {
    for (double y = std::floor(y0) + 0.5; y < y1; y += 1.0) {
      const bool ab = inside(a, x - e, y) && inside(b, x + e, y);
      const bool ba = inside(b, x - e, y) && inside(a, x + e, y);
      if (ab || ba) out.push_back({x, y});
    }
  }
  for (double y : ys) {
    for (double x = std::floor(x0) + 0.5; x < x1; x += 1.0) {
      const bool ab = inside(a, x, y - e) && inside(b, x, y + e);
      const bool ba = inside(b, x, y - e) && inside(a, x, y + e);
      if (ab || ba) out.push_back({x, y});
    }
  }
  return out;
}

double overlap(const geom::Rect& p, const geom::Rect& q) {
  const double w = std::min(p.max.x, q.max.x) - std::max(p.min.x, q.min.x);
  const double h = std::min(p.max.y, q.max.y) - std::max(p.min.y, q.min.y);
  return w > 0 && h > 0 ? w * h : 0.0;
}

}  // namespace

double raster_iou(const geom::Rect& a, const geom::Rect& b) {
  // rectangles are separable: pixels inside = columns inside x rows inside
  const double ca = static_cast<double>(covered(a.min.x, a.max.x) * covered(a.min.y, a.max.y));
  const double cb = static_cast<double>(covered(b.min.x, b.max.x) * covered(b.min.y, b.max.y));
  const double ix = static_cast<double>(covered(std::max(a.min.x, b.min.x), std::min(a.max.x, b.max.x)));
  const double iy = static_cast<double>(covered(std::max(a.min.y, b.min.y), std::min(a.max.y, b.max.y)));
  const double inter = (std::min(a.max.x, b.max.x) > std::max(a.min.x, b.min.x) &&
                        std::min(a.max.y, b.max.y) > std::max(a.min.y, b.min.y))
                           ? ix * iy
                           : 0.0;
  const double uni = ca + cb - inter;
  return uni > 0 ? inter / uni : 0.0;
}

double sampled_shared_length(const std::vector<geom::Rect>& a, const std::vector<geom::Rect>& b) {
  return static_cast<double>(shared_probes(a, b).size());
}

bool sampled_connected(const std::vector<geom::Rect>& a, const std::vector<geom::Rect>& b,
                       const std::vector<geom::Point>& openings, const std::vector<geom::Segment>& open_edges) {
  for (const auto& p : shared_probes(a, b)) {
    for (const auto& o : openings) {
      if (std::abs(o.x - p.x) <= 1.0 && std::abs(o.y - p.y) <= 1.0) return true;
    }
    for (const auto& s : open_edges) {
      // on the edge's line, clear of its end points
      const double lx = std::min(s.a.x, s.b.x), hx = std::max(s.a.x, s.b.x);
      const double ly = std::min(s.a.y, s.b.y), hy = std::max(s.a.y, s.b.y);
      if (ly == hy && std::abs(p.y - ly) <= 0.5 && p.x > lx + 0.5 && p.x < hx - 0.5) return true;
      if (lx == hx && std::abs(p.x - lx) <= 0.5 && p.y > ly + 0.5 && p.y < hy - 0.5) return true;
    }
  }
  return false;
}

double plain_iou(const std::vector<geom::Rect>& a, const std::vector<geom::Rect>& b) {
  double inter = 0, sa = 0, sb = 0;
  for (const auto& p : a) sa += (p.max.x - p.min.x) * (p.max.y - p.min.y);
  for (const auto& q : b) sb += (q.max.x - q.min.x) * (q.max.y - q.min.y);
  for (const auto& p : a) {
    for (const auto& q : b) inter += overlap(p, q);
  }
  const double uni = sa + sb - inter;
  return uni > 0 ? inter / uni : 0.0;
}

double enumerated_category_iou(const std::vector<LabeledRect>& pred, const std::vector<LabeledRect>& gold) {
  const std::size_t n = std::max(pred.size(), gold.size());
  if (n == 0) return 0.0;
  // pad the shorter side with blanks and try every permutation
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  double best = 0.0;
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
      const std::size_t j = perm[i];
      if (j < gold.size() && pred[i].label == gold[j].label) s += plain_iou(pred[i].parts, gold[j].parts);
    }
    best = std::max(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best / static_cast<double>(n);
}

}  // namespace mbl::oracle
