// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Reference computations for the tests. They work from raw rectangles and
// brute force so they share no code path with the library under test.

#include <string>
#include <utility>
#include <vector>

#include "mbl/geom/types.hpp"
#include "mbl/kernel/document.hpp"

namespace mbl::oracle {

/// IoU by counting 1 mm pixel centres covered by each rectangle.
double raster_iou(const geom::Rect& a, const geom::Rect& b);

/// Length of common boundary between two interior-disjoint rect unions,
/// found by probing both sides of every candidate line at 1 mm steps.
double sampled_shared_length(const std::vector<geom::Rect>& a, const std::vector<geom::Rect>& b);

/// True if some probe point of the common boundary lies within 1 mm of a
/// door or hole centre, or strictly inside an open side of either room.
bool sampled_connected(const std::vector<geom::Rect>& a, const std::vector<geom::Rect>& b,
                       const std::vector<geom::Point>& openings, const std::vector<geom::Segment>& open_edges);

/// Best one-to-one matching score over all injective maps, divided by the
/// larger count. Pairs with different labels score zero.
struct LabeledRect {
  std::string label;
  std::vector<geom::Rect> parts;
};
double enumerated_category_iou(const std::vector<LabeledRect>& pred, const std::vector<LabeledRect>& gold);

/// IoU of two rect unions via pairwise overlap of their parts.
double plain_iou(const std::vector<geom::Rect>& a, const std::vector<geom::Rect>& b);

}  // namespace mbl::oracle
