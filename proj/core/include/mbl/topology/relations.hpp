// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "mbl/kernel/document.hpp"

namespace mbl::topology {

enum class Level { Modules, Rooms };

/// Square relation over the live modules or the rooms of a document, in
/// document order. Adjacency holds shared boundary length in mm; boolean
/// relations hold 0 or 1.
struct RelationMatrix {
  std::vector<int> ids;
  std::vector<std::string> names;
  std::vector<std::vector<double>> values;

  std::size_t size() const { return ids.size(); }
  double at(std::size_t i, std::size_t j) const { return values[i][j]; }
  bool test(std::size_t i, std::size_t j) const { return values[i][j] != 0.0; }
};

RelationMatrix adjacency(const kernel::LayoutDocument& doc, Level level);

/// A door or hole on the common boundary, or (rooms) an open side along it.
RelationMatrix connectivity(const kernel::LayoutDocument& doc, Level level);

/// Rooms that both overlap one module.
RelationMatrix conjoint(const kernel::LayoutDocument& doc);

struct ContainmentVerdict {
  std::string entity;  // "unit" or "room"
  int id = 0;
  std::string name;
  double excess = 0.0;  // mm^2 outside the container
  bool pass = true;
};

/// Units against their modules, rooms against their unit.
std::vector<ContainmentVerdict> validate_containment(const kernel::LayoutDocument& doc);

struct TopologyReport {
  RelationMatrix module_adjacency;
  RelationMatrix room_adjacency;
  RelationMatrix module_connectivity;
  RelationMatrix room_connectivity;
  RelationMatrix room_conjoint;
  std::vector<ContainmentVerdict> containment;
};

TopologyReport analyze(const kernel::LayoutDocument& doc);

/// Pairs of rooms whose interiors overlap by more than tolerance^2.
std::vector<std::pair<int, int>> overlapping_rooms(const kernel::LayoutDocument& doc);

/// Header row of names, then one row per entity.
std::string to_csv(const RelationMatrix& m);

}  // namespace mbl::topology
