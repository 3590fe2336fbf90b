// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbl/geom/region.hpp"
#include "mbl/geom/types.hpp"

namespace mbl::kernel {

struct Config {
  double wall_thickness = 100.0;
  double tolerance = geom::kDefaultTolerance;
  double min_wall = 200.0;    // shorter wall pieces are not kept
  double door_width = 900.0;  // leaf width when a door call gives none
  std::string level = "Level 1";

  friend bool operator==(const Config&, const Config&) = default;
};

enum class Side { North, South, East, West };

std::string_view to_string(Side s);
std::optional<Side> side_from_string(std::string_view s);
/// The centerline segment of a rectangle side, a < b along the axis.
geom::Segment side_segment(const geom::Rect& r, Side s);

struct Wall {
  int id = 0;
  geom::Segment centerline;
  double thickness = 0.0;
  bool room_bounding = true;
  std::vector<int> openings;

  bool horizontal() const { return centerline.a.y == centerline.b.y; }
};

struct Floor {
  int id = 0;
  int module = 0;
  geom::Region region;
};

struct ModuleEntity {
  int id = 0;
  std::string label;
  geom::Rect rect;      // bounding rect of the region
  geom::Region region;  // a single rect unless produced by a merge
  std::string level;
  std::vector<int> walls;  // walls running along the boundary
  int floor = 0;
  bool retired = false;
  std::vector<int> sources;  // split parent or merged members
  std::string origin = "created";  // created | split | merge
};

struct UnitEntity {
  int id = 0;
  std::string label;
  std::vector<int> modules;
  geom::Region region;
  geom::Contour boundary;
  std::vector<int> rooms;
};

struct RoomEntity {
  int id = 0;
  std::string label;
  geom::Region region;  // nominal area bounded by wall centerlines
  geom::Rect rect;      // inner rect: nominal bounds inset by half a wall
  geom::Point center;
  int unit = 0;
  std::vector<int> hosts;  // modules the room lies in
  std::vector<Side> open_sides;
  bool regular = true;
};

enum class OpeningKind { Door, Hole };

struct Opening {
  int id = 0;
  OpeningKind kind = OpeningKind::Door;
  int wall = 0;
  geom::Point center;
  double dimension = 0.0;
  std::string set_mode = "none";  // doors: in | out | none
  double set_dimension = 0.0;
  std::string host_kind;  // "room" or "module"
  int host = 0;
  Side side = Side::North;
};

struct LogEntry {
  std::size_t statement = 0;
  std::string action;
  std::string entity;  // module | unit | room | door | hole
  int id = 0;
};

/// An executed layout. Retired modules stay in the collection (flagged) so
/// the creation log can refer to them.
struct LayoutDocument {
  Config config;
  std::vector<ModuleEntity> modules;
  std::vector<UnitEntity> units;
  std::vector<RoomEntity> rooms;
  std::map<int, Wall> walls;
  std::vector<Floor> floors;
  std::vector<Opening> doors;
  std::vector<Opening> holes;
  std::vector<LogEntry> log;
  int next_id = 1;

  const ModuleEntity* module(int id) const;
  ModuleEntity* module(int id);
  const UnitEntity* unit(int id) const;
  UnitEntity* unit(int id);
  const RoomEntity* room(int id) const;
  RoomEntity* room(int id);
  std::vector<const ModuleEntity*> live_modules() const;
  const Opening* opening(int id) const;
};

}  // namespace mbl::kernel
