// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/synth/skeleton.hpp"

#include <regex>

#include "mbl/dsl/signatures.hpp"

namespace mbl::synth {

LayoutCounts count_layout(const kernel::LayoutDocument& doc) {
  LayoutCounts c;
  c.modules = static_cast<int>(doc.live_modules().size());
  c.units = static_cast<int>(doc.units.size());
  for (const auto& r : doc.rooms) {
    const auto s = dsl::semantic_label(r.label);
    if (s == "living room") ++c.living_rooms;
    if (s == "bathroom") ++c.bathrooms;
    if (s == "bedroom") ++c.bedrooms;
    if (s == "kitchen") ++c.kitchens;
  }
  return c;
}

std::string skeleton_instruction(const LayoutCounts& c) {
  return "Generate a layout with " + std::to_string(c.modules) + " module, " + std::to_string(c.units) + " unit, " +
         std::to_string(c.living_rooms) + " living room, " + std::to_string(c.bathrooms) + " bathroom, " +
         std::to_string(c.bedrooms) + " bedroom, " + std::to_string(c.kitchens) + " kitchen.";
}

std::string skeleton_instruction(const kernel::LayoutDocument& doc) { return skeleton_instruction(count_layout(doc)); }

std::optional<LayoutCounts> parse_skeleton(std::string_view sentence) {
  static const std::regex re(
      R"(^\s*Generate a layout with (\d+) module, (\d+) unit, (\d+) living room, (\d+) bathroom, (\d+) bedroom, (\d+) kitchen\.\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(sentence.begin(), sentence.end(), m, re)) return std::nullopt;
  LayoutCounts c;
  int* fields[] = {&c.modules, &c.units, &c.living_rooms, &c.bathrooms, &c.bedrooms, &c.kitchens};
  for (int k = 0; k < 6; ++k) *fields[k] = std::stoi(m[k + 1].str());
  return c;
}

}  // namespace mbl::synth
