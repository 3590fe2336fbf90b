// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace mbl::metrics {

/// Minimum-cost one-to-one assignment on a rectangular cost matrix
/// (Hungarian method). Result[i] is the column assigned to row i, or -1 when
/// there are more rows than columns and row i is left out.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

/// Same, maximizing the summed weight.
std::vector<int> max_weight_assignment(const std::vector<std::vector<double>>& weight);

}  // namespace mbl::metrics
