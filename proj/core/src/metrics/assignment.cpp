// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/metrics/assignment.hpp"

#include <limits>

namespace mbl::metrics {

namespace {

// rows <= cols; potentials u, v over a 1-based layout.
std::vector<int> hungarian(const std::vector<std::vector<double>>& a, std::size_t n, std::size_t m) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row(n, -1);
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j]) row[p[j] - 1] = static_cast<int>(j - 1);
  }
  return row;
}

}  // namespace

std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  if (n == 0) return {};
  const std::size_t m = cost.front().size();
  if (m == 0) return std::vector<int>(n, -1);
  if (n <= m) return hungarian(cost, n, m);
  std::vector<std::vector<double>> t(m, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[j][i] = cost[i][j];
  }
  const auto cols = hungarian(t, m, n);
  std::vector<int> row(n, -1);
  for (std::size_t j = 0; j < m; ++j) {
    if (cols[j] >= 0) row[static_cast<std::size_t>(cols[j])] = static_cast<int>(j);
  }
  return row;
}

std::vector<int> max_weight_assignment(const std::vector<std::vector<double>>& weight) {
  auto cost = weight;
  for (auto& r : cost) {
    for (auto& c : r) c = -c;
  }
  return min_cost_assignment(cost);
}

}  // namespace mbl::metrics
