// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mbl/kernel/document.hpp"

namespace mbl::synth {

struct LayoutCounts {
  int modules = 0;
  int units = 0;
  int living_rooms = 0;
  int bathrooms = 0;
  int bedrooms = 0;
  int kitchens = 0;

  friend bool operator==(const LayoutCounts&, const LayoutCounts&) = default;
};

LayoutCounts count_layout(const kernel::LayoutDocument& doc);

/// "Generate a layout with 2 module, 1 unit, 1 living room, 1 bathroom, 2 bedroom, 1 kitchen."
std::string skeleton_instruction(const LayoutCounts& c);
std::string skeleton_instruction(const kernel::LayoutDocument& doc);

std::optional<LayoutCounts> parse_skeleton(std::string_view sentence);

}  // namespace mbl::synth
