// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/topology/relations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mbl/dsl/canonical.hpp"
#include "mbl/geom/ops.hpp"
#include "mbl/geom/region.hpp"

namespace mbl::topology {

namespace {

struct Space {
  int id;
  std::string name;
  const geom::Region* region;
  const kernel::RoomEntity* room;  // null for modules
};

std::vector<Space> spaces(const kernel::LayoutDocument& doc, Level level) {
  std::vector<Space> out;
  if (level == Level::Modules) {
    for (const auto* m : doc.live_modules()) out.push_back({m->id, m->label, &m->region, nullptr});
  } else {
    for (const auto& r : doc.rooms) out.push_back({r.id, r.label, &r.region, &r});
  }
  return out;
}

RelationMatrix blank(const std::vector<Space>& s) {
  RelationMatrix m;
  for (const auto& x : s) {
    m.ids.push_back(x.id);
    m.names.push_back(x.name);
  }
  m.values.assign(s.size(), std::vector<double>(s.size(), 0.0));
  return m;
}

bool on_segment(geom::Point p, const geom::Segment& s, double t) {
  const double lox = std::min(s.a.x, s.b.x), hix = std::max(s.a.x, s.b.x);
  const double loy = std::min(s.a.y, s.b.y), hiy = std::max(s.a.y, s.b.y);
  return p.x >= lox - t && p.x <= hix + t && p.y >= loy - t && p.y <= hiy + t;
}

}  // namespace

RelationMatrix adjacency(const kernel::LayoutDocument& doc, Level level) {
  const double t = doc.config.tolerance;
  const auto s = spaces(doc, level);
  auto m = blank(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      double len = geom::shared_boundary_length(*s[i].region, *s[j].region, t);
      if (len <= t) len = 0.0;
      m.values[i][j] = m.values[j][i] = len;
    }
  }
  return m;
}

RelationMatrix connectivity(const kernel::LayoutDocument& doc, Level level) {
  const double t = doc.config.tolerance;
  const auto s = spaces(doc, level);
  auto m = blank(s);
  std::vector<const kernel::Opening*> openings;
  for (const auto& o : doc.doors) openings.push_back(&o);
  for (const auto& o : doc.holes) openings.push_back(&o);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const auto shared = geom::shared_boundary(*s[i].region, *s[j].region, t);
      bool linked = false;
      for (const auto& seg : shared) {
        if (seg.length() <= t) continue;
        for (const auto* o : openings) linked = linked || on_segment(o->center, seg, t);
        if (level == Level::Rooms) {
          for (const auto* r : {s[i].room, s[j].room}) {
            for (auto side : r->open_sides) {
              const auto edge = kernel::side_segment(r->region.bounds(), side);
              linked = linked || geom::collinear_overlap(edge, seg, t) > t;
            }
          }
        }
      }
      m.values[i][j] = m.values[j][i] = linked ? 1.0 : 0.0;
    }
  }
  return m;
}

RelationMatrix conjoint(const kernel::LayoutDocument& doc) {
  const double t = doc.config.tolerance;
  const auto s = spaces(doc, Level::Rooms);
  auto m = blank(s);
  const auto modules = doc.live_modules();
  std::vector<std::vector<bool>> in(s.size(), std::vector<bool>(modules.size(), false));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t k = 0; k < modules.size(); ++k) {
      in[i][k] = geom::overlap_area(*s[i].region, modules[k]->region, t) > t * t;
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      bool shared = false;
      for (std::size_t k = 0; k < modules.size(); ++k) shared = shared || (in[i][k] && in[j][k]);
      m.values[i][j] = m.values[j][i] = shared ? 1.0 : 0.0;
    }
  }
  return m;
}

std::vector<ContainmentVerdict> validate_containment(const kernel::LayoutDocument& doc) {
  const double t = doc.config.tolerance;
  std::vector<ContainmentVerdict> out;
  for (const auto& u : doc.units) {
    std::vector<geom::Rect> parts;
    for (int id : u.modules) {
      const auto* m = doc.module(id);
      if (m && !m->retired) parts.insert(parts.end(), m->region.parts().begin(), m->region.parts().end());
    }
    const geom::Region host(std::move(parts));
    const double excess = geom::excess_area(u.region, host, t);
    out.push_back({"unit", u.id, u.label, excess, excess <= t * geom::perimeter(u.region, t)});
  }
  for (const auto& r : doc.rooms) {
    const auto* u = doc.unit(r.unit);
    const double excess = u ? geom::excess_area(r.region, u->region, t) : r.region.area();
    out.push_back({"room", r.id, r.label, excess, u && excess <= t * geom::perimeter(r.region, t)});
  }
  return out;
}

std::vector<std::pair<int, int>> overlapping_rooms(const kernel::LayoutDocument& doc) {
  const double t = doc.config.tolerance;
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < doc.rooms.size(); ++i) {
    for (std::size_t j = i + 1; j < doc.rooms.size(); ++j) {
      if (geom::overlap_area(doc.rooms[i].region, doc.rooms[j].region, t) > t * t) {
        out.emplace_back(doc.rooms[i].id, doc.rooms[j].id);
      }
    }
  }
  return out;
}

TopologyReport analyze(const kernel::LayoutDocument& doc) {
  return {adjacency(doc, Level::Modules),     adjacency(doc, Level::Rooms), connectivity(doc, Level::Modules),
          connectivity(doc, Level::Rooms),    conjoint(doc),                validate_containment(doc)};
}

std::string to_csv(const RelationMatrix& m) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "name";
  for (const auto& n : m.names) os << ',' << quote(n);
  os << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << quote(m.names[i]);
    for (std::size_t j = 0; j < m.size(); ++j) os << ',' << dsl::format_number(m.values[i][j]);
    os << '\n';
  }
  return os.str();
}

}  // namespace mbl::topology
