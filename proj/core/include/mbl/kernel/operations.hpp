// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mbl/kernel/document.hpp"

namespace mbl::kernel {

enum class ExecCategory {
  ContainmentViolation,
  Overlap,
  WallNotFound,
  BadRatio,
  MergeNotAdjacent,
  HostTooSmall,
  DegenerateDimension,
  Disconnected,
  HasHole,
  NoResidualSpace,
  RetiredEntity,
  UndefinedEntity,
  NotCompiled,
};

std::string_view to_string(ExecCategory c);

/// Thrown by the operations below; the executor turns it into an ExecError.
class ExecFailure : public std::runtime_error {
 public:
  ExecFailure(ExecCategory c, const std::string& what) : std::runtime_error(what), category_(c) {}
  ExecCategory category() const { return category_; }

 private:
  ExecCategory category_;
};

enum class SplitAxis { WestEast, NorthSouth };  // west-east cuts horizontally

struct RoomHost {
  std::optional<int> module;  // none: the whole unit hosts the room
  int unit = 0;
};

struct Corner {
  Side vertical;    // north or south
  Side horizontal;  // east or west
};

std::optional<Corner> corner_from_string(std::string_view s);

struct OpeningSpec {
  Side direction = Side::North;
  std::optional<Side> alignment;  // none: centred on the usable span
  double offset = 0.0;
  std::string set_mode = "in";
  double set_dimension = 0.0;
  double dimension = 900.0;
};

// Modules.
int create_module_absolute(LayoutDocument& doc, std::string label, geom::Point anchor, double length,
                           double width);
int create_module_relative(LayoutDocument& doc, std::string label, int ref, Side direction, double length,
                           double width, std::optional<Side> alignment, std::optional<Side> offset_direction,
                           double offset);
/// Index 0 is the north (west-east cut) or west (north-south cut) piece and
/// takes `ratio` of the extent.
std::pair<int, int> split_module(LayoutDocument& doc, int module, SplitAxis axis, double ratio);
int merge_modules(LayoutDocument& doc, const std::vector<int>& modules);

// Units.
int create_unit_from_modules(LayoutDocument& doc, std::string label, const std::vector<int>& modules);
int create_unit_directional(LayoutDocument& doc, std::string label, const std::vector<int>& modules,
                            Side direction, const std::vector<double>& dimensions);

// Rooms.
int create_room_in_container(LayoutDocument& doc, std::string label, RoomHost host, bool regular);
int create_room_directional(LayoutDocument& doc, std::string label, RoomHost host, Side direction,
                            double dimension, bool open);
int create_room_corner(LayoutDocument& doc, std::string label, RoomHost host, Corner corner, double length,
                       double width, std::optional<Side> offset_direction, double offset, bool open);
int create_room_relative(LayoutDocument& doc, std::string label, int unit, int ref_room, Side direction,
                         double length, double width, std::optional<Side> alignment,
                         std::optional<Side> offset_direction, double offset, bool open);
/// `length` and `width` are the clear inner extents.
int create_room_at_point(LayoutDocument& doc, std::string label, int unit, geom::Point center, double length,
                         double width);

// Elements.
int create_door_for_room(LayoutDocument& doc, int room, const OpeningSpec& spec);
int create_door_for_module(LayoutDocument& doc, int module, const OpeningSpec& spec);
int create_hole(LayoutDocument& doc, int module, const OpeningSpec& spec);

// Walls.
/// Adds a wall along `seg`, merging with collinear walls it touches or
/// overlaps. Returns the surviving wall id, or 0 when the piece is shorter
/// than the configured minimum.
int ensure_wall(LayoutDocument& doc, geom::Segment seg, bool room_bounding = true);
/// Cuts `seg` out of every wall lying on it; leftovers shorter than the
/// minimum disappear together with the openings they carried.
void remove_wall_segment(LayoutDocument& doc, geom::Segment seg);
/// Walls on the line of `seg` overlapping it by more than the tolerance.
std::vector<int> walls_on(const LayoutDocument& doc, geom::Segment seg);

}  // namespace mbl::kernel
