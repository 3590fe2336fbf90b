// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "grid.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <utility>

namespace mbl::geom::detail {

Axis::Axis(std::vector<double> raw, double tol) : raw_(std::move(raw)) {
  std::sort(raw_.begin(), raw_.end());
  raw_.erase(std::unique(raw_.begin(), raw_.end()), raw_.end());
  cluster_.resize(raw_.size());
  for (std::size_t k = 0; k < raw_.size(); ++k) {
    if (k == 0 || raw_[k] - raw_[k - 1] > tol) values_.push_back(raw_[k]);
    cluster_[k] = values_.size() - 1;
  }
}

std::size_t Axis::index_of(double v) const {
  auto it = std::lower_bound(raw_.begin(), raw_.end(), v);
  std::size_t k;
  if (it == raw_.end()) {
    k = raw_.size() - 1;
  } else if (it == raw_.begin() || *it == v) {
    k = static_cast<std::size_t>(it - raw_.begin());
  } else {
    const auto hi = static_cast<std::size_t>(it - raw_.begin());
    k = (v - raw_[hi - 1] <= raw_[hi] - v) ? hi - 1 : hi;
  }
  return cluster_[k];
}

double Axis::snap(double v) const { return values_[index_of(v)]; }

Grid::Grid(std::span<const std::vector<Rect>* const> sets, double tol) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto* set : sets) {
    for (const auto& r : *set) {
      xs.push_back(r.min.x);
      xs.push_back(r.max.x);
      ys.push_back(r.min.y);
      ys.push_back(r.max.y);
    }
  }
  xs_ = Axis(std::move(xs), tol);
  ys_ = Axis(std::move(ys), tol);
}

Grid::Mask Grid::rasterize(const std::vector<Rect>& rects) const {
  Mask mask(nx() * ny(), 0);
  for (const auto& r : rects) {
    const auto i0 = xs_.index_of(r.min.x);
    const auto i1 = xs_.index_of(r.max.x);
    const auto j0 = ys_.index_of(r.min.y);
    const auto j1 = ys_.index_of(r.max.y);
    for (auto j = j0; j < j1; ++j) {
      for (auto i = i0; i < i1; ++i) mask[j * nx() + i] = 1;
    }
  }
  return mask;
}

std::vector<Rect> Grid::to_rects(const Mask& mask) const {
  struct Open {
    std::size_t i0, i1, j0;
  };
  std::vector<Rect> out;
  std::vector<Open> open;
  for (std::size_t j = 0; j <= ny(); ++j) {
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    if (j < ny()) {
      std::size_t i = 0;
      while (i < nx()) {
        if (!mask[j * nx() + i]) {
          ++i;
          continue;
        }
        std::size_t s = i;
        while (i < nx() && mask[j * nx() + i]) ++i;
        runs.emplace_back(s, i);
      }
    }
    std::vector<Open> next;
    for (const auto& o : open) {
      auto hit = std::find(runs.begin(), runs.end(), std::make_pair(o.i0, o.i1));
      if (hit != runs.end()) {
        next.push_back(o);
        runs.erase(hit);
      } else {
        out.push_back(Rect{{x(o.i0), y(o.j0)}, {x(o.i1), y(j)}});
      }
    }
    for (const auto& [s, e] : runs) next.push_back({s, e, j});
    open = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Rect& a, const Rect& b) {
    return std::tie(a.min.y, a.min.x) < std::tie(b.min.y, b.min.x);
  });
  return out;
}

std::vector<Grid::Mask> Grid::components(const Mask& mask) const {
  std::vector<int> label(mask.size(), -1);
  std::vector<Mask> comps;
  for (std::size_t start = 0; start < mask.size(); ++start) {
    if (!mask[start] || label[start] >= 0) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back(mask.size(), 0);
    std::queue<std::size_t> q;
    q.push(start);
    label[start] = id;
    while (!q.empty()) {
      const auto c = q.front();
      q.pop();
      comps.back()[c] = 1;
      const long i = static_cast<long>(c % nx());
      const long j = static_cast<long>(c / nx());
      const std::array<std::pair<long, long>, 4> nbrs{{{i + 1, j}, {i - 1, j}, {i, j + 1}, {i, j - 1}}};
      for (const auto& [a, b] : nbrs) {
        if (!at(mask, a, b)) continue;
        const auto n = static_cast<std::size_t>(b) * nx() + static_cast<std::size_t>(a);
        if (label[n] >= 0) continue;
        label[n] = id;
        q.push(n);
      }
    }
  }
  return comps;
}

std::vector<std::vector<Point>> Grid::loops(const Mask& mask) const {
  using Vertex = std::pair<long, long>;
  struct Edge {
    Vertex from, to;
    bool used = false;
  };
  std::vector<Edge> edges;
  for (long j = 0; j < static_cast<long>(ny()); ++j) {
    for (long i = 0; i < static_cast<long>(nx()); ++i) {
      if (!at(mask, i, j)) continue;
      // Interior stays on the right of every directed edge.
      if (!at(mask, i, j + 1)) edges.push_back({{i, j + 1}, {i + 1, j + 1}});
      if (!at(mask, i + 1, j)) edges.push_back({{i + 1, j + 1}, {i + 1, j}});
      if (!at(mask, i, j - 1)) edges.push_back({{i + 1, j}, {i, j}});
      if (!at(mask, i - 1, j)) edges.push_back({{i, j}, {i, j + 1}});
    }
  }
  std::multimap<Vertex, std::size_t> outgoing;
  for (std::size_t k = 0; k < edges.size(); ++k) outgoing.emplace(edges[k].from, k);

  auto direction = [](const Edge& e) {
    return std::make_pair(e.to.first - e.from.first, e.to.second - e.from.second);
  };

  std::vector<std::vector<Point>> result;
  for (std::size_t seed = 0; seed < edges.size(); ++seed) {
    if (edges[seed].used) continue;
    std::vector<Point> loop;
    std::size_t cur = seed;
    while (!edges[cur].used) {
      edges[cur].used = true;
      const auto& e = edges[cur];
      loop.push_back({x(static_cast<std::size_t>(e.from.first)), y(static_cast<std::size_t>(e.from.second))});
      const auto [dx, dy] = direction(e);
      // Prefer a right turn, then straight, then left at pinch vertices.
      std::size_t best = edges.size();
      int best_rank = 4;
      auto [lo, hi] = outgoing.equal_range(e.to);
      for (auto it = lo; it != hi; ++it) {
        const auto& cand = edges[it->second];
        if (cand.used && it->second != seed) continue;
        const auto [cx, cy] = direction(cand);
        const long cross = dx * cy - dy * cx;
        const int rank = cross < 0 ? 0 : (cross == 0 ? 1 : 2);
        if (rank < best_rank) {
          best_rank = rank;
          best = it->second;
        }
      }
      if (best == edges.size()) break;
      cur = best;
    }
    result.push_back(std::move(loop));
  }
  return result;
}

}  // namespace mbl::geom::detail
