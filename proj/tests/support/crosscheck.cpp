// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "crosscheck.hpp"

#include <cmath>

#include "mbl/topology/relations.hpp"
#include "oracles.hpp"

namespace mbl::oracle {

namespace {

struct Space {
  int id;
  std::vector<geom::Rect> parts;
  std::vector<geom::Segment> open_edges;
};

// Side of the bounding box, written out here rather than taken from the kernel.
geom::Segment bbox_side(const std::vector<geom::Rect>& parts, kernel::Side s) {
  geom::Rect b = parts.front();
  for (const auto& r : parts) {
    b.min.x = std::min(b.min.x, r.min.x);
    b.min.y = std::min(b.min.y, r.min.y);
    b.max.x = std::max(b.max.x, r.max.x);
    b.max.y = std::max(b.max.y, r.max.y);
  }
  switch (s) {
    case kernel::Side::North: return {{b.min.x, b.max.y}, {b.max.x, b.max.y}};
    case kernel::Side::South: return {{b.min.x, b.min.y}, {b.max.x, b.min.y}};
    case kernel::Side::East: return {{b.max.x, b.min.y}, {b.max.x, b.max.y}};
    case kernel::Side::West: return {{b.min.x, b.min.y}, {b.min.x, b.max.y}};
  }
  return {};
}

void compare(const std::string& what, const std::vector<Space>& s, const topology::RelationMatrix& adj,
             const topology::RelationMatrix& con, const std::vector<geom::Point>& openings, double tol,
             std::vector<std::string>& out) {
  if (adj.size() != s.size() || con.size() != s.size()) {
    out.push_back(what + ": matrix size " + std::to_string(adj.size()) + " for " + std::to_string(s.size()));
    return;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i == j) continue;
      const double want = sampled_shared_length(s[i].parts, s[j].parts);
      if (std::abs(adj.at(i, j) - want) > tol) {
        out.push_back(what + " adjacency " + adj.names[i] + "/" + adj.names[j] + ": " +
                      std::to_string(adj.at(i, j)) + " vs sampled " + std::to_string(want));
      }
      auto edges = s[i].open_edges;
      edges.insert(edges.end(), s[j].open_edges.begin(), s[j].open_edges.end());
      const bool linked = want > 0.0 && sampled_connected(s[i].parts, s[j].parts, openings, edges);
      if (con.test(i, j) != linked) {
        out.push_back(what + " connectivity " + con.names[i] + "/" + con.names[j] + ": " +
                      (con.test(i, j) ? "1" : "0") + " vs sampled " + (linked ? "1" : "0"));
      }
    }
  }
}

}  // namespace

std::vector<std::string> topology_disagreements(const kernel::LayoutDocument& doc, double length_tol) {
  std::vector<geom::Point> openings;
  for (const auto& o : doc.doors) openings.push_back(o.center);
  for (const auto& o : doc.holes) openings.push_back(o.center);

  std::vector<Space> modules;
  for (const auto* m : doc.live_modules()) modules.push_back({m->id, m->region.parts(), {}});
  std::vector<Space> rooms;
  for (const auto& r : doc.rooms) {
    Space sp{r.id, r.region.parts(), {}};
    for (auto side : r.open_sides) sp.open_edges.push_back(bbox_side(sp.parts, side));
    rooms.push_back(std::move(sp));
  }

  std::vector<std::string> out;
  const auto rep = topology::analyze(doc);
  compare("module", modules, rep.module_adjacency, rep.module_connectivity, openings, length_tol, out);
  compare("room", rooms, rep.room_adjacency, rep.room_connectivity, openings, length_tol, out);
  return out;
}

}  // namespace mbl::oracle
