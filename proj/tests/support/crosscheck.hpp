// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Library topology checked against the sampling oracles.

#include <string>
#include <vector>

#include "mbl/kernel/document.hpp"

namespace mbl::oracle {

/// One line per disagreement: adjacency length off by more than
/// `length_tol` mm, or a connectivity verdict that differs.
std::vector<std::string> topology_disagreements(const kernel::LayoutDocument& doc, double length_tol = 2.0);

}  // namespace mbl::oracle
