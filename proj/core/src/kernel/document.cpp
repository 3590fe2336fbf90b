// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/kernel/document.hpp"

namespace mbl::kernel {

std::string_view to_string(Side s) {
  switch (s) {
    case Side::North: return "north";
    case Side::South: return "south";
    case Side::East: return "east";
    case Side::West: return "west";
  }
  return "?";
}

std::optional<Side> side_from_string(std::string_view s) {
  if (s == "north") return Side::North;
  if (s == "south") return Side::South;
  if (s == "east") return Side::East;
  if (s == "west") return Side::West;
  return std::nullopt;
}

geom::Segment side_segment(const geom::Rect& r, Side s) {
  switch (s) {
    case Side::North: return {{r.min.x, r.max.y}, {r.max.x, r.max.y}};
    case Side::South: return {{r.min.x, r.min.y}, {r.max.x, r.min.y}};
    case Side::East: return {{r.max.x, r.min.y}, {r.max.x, r.max.y}};
    case Side::West: return {{r.min.x, r.min.y}, {r.min.x, r.max.y}};
  }
  return {};
}

namespace {

template <typename T, typename V>
T* find_id(V& v, int id) {
  for (auto& e : v) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

}  // namespace

const ModuleEntity* LayoutDocument::module(int id) const { return find_id<const ModuleEntity>(modules, id); }
ModuleEntity* LayoutDocument::module(int id) { return find_id<ModuleEntity>(modules, id); }
const UnitEntity* LayoutDocument::unit(int id) const { return find_id<const UnitEntity>(units, id); }
UnitEntity* LayoutDocument::unit(int id) { return find_id<UnitEntity>(units, id); }
const RoomEntity* LayoutDocument::room(int id) const { return find_id<const RoomEntity>(rooms, id); }
RoomEntity* LayoutDocument::room(int id) { return find_id<RoomEntity>(rooms, id); }

std::vector<const ModuleEntity*> LayoutDocument::live_modules() const {
  std::vector<const ModuleEntity*> out;
  for (const auto& m : modules) {
    if (!m.retired) out.push_back(&m);
  }
  return out;
}

const Opening* LayoutDocument::opening(int id) const {
  if (const auto* d = find_id<const Opening>(doors, id)) return d;
  return find_id<const Opening>(holes, id);
}

}  // namespace mbl::kernel
