// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/harness/layout_json.hpp"

#include <json.hpp>

namespace mbl::harness {

namespace {

using json = nlohmann::ordered_json;

json point(geom::Point p) { return json::array({p.x, p.y}); }
json rect(const geom::Rect& r) { return json::array({r.min.x, r.min.y, r.max.x, r.max.y}); }

json region(const geom::Region& r) {
  json out = json::array();
  for (const auto& p : r.parts()) out.push_back(rect(p));
  return out;
}

json matrix(const topology::RelationMatrix& m) {
  json o;
  o["ids"] = m.ids;
  o["names"] = m.names;
  o["values"] = m.values;
  return o;
}

geom::Point to_point(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }
geom::Rect to_rect(const json& j) {
  return {{j.at(0).get<double>(), j.at(1).get<double>()}, {j.at(2).get<double>(), j.at(3).get<double>()}};
}
geom::Region to_region(const json& j) {
  std::vector<geom::Rect> parts;
  for (const auto& r : j) parts.push_back(to_rect(r));
  return geom::Region(std::move(parts));
}

json opening(const kernel::Opening& o) {
  json j;
  j["id"] = o.id;
  j["wall"] = o.wall;
  j["center"] = point(o.center);
  j["width"] = o.dimension;
  j["set"] = o.set_mode;
  j["set_dimension"] = o.set_dimension;
  j["host_kind"] = o.host_kind;
  j["host"] = o.host;
  j["side"] = std::string(kernel::to_string(o.side));
  return j;
}

kernel::Side side(const json& j) {
  const auto s = kernel::side_from_string(j.get<std::string>());
  if (!s) throw SchemaError("bad side '" + j.get<std::string>() + "'");
  return *s;
}

kernel::Opening to_opening(const json& j, kernel::OpeningKind kind) {
  kernel::Opening o;
  o.id = j.at("id").get<int>();
  o.kind = kind;
  o.wall = j.at("wall").get<int>();
  o.center = to_point(j.at("center"));
  o.dimension = j.at("width").get<double>();
  o.set_mode = j.at("set").get<std::string>();
  o.set_dimension = j.at("set_dimension").get<double>();
  o.host_kind = j.at("host_kind").get<std::string>();
  o.host = j.at("host").get<int>();
  o.side = side(j.at("side"));
  return o;
}

}  // namespace

std::string export_layout_json(const kernel::LayoutDocument& doc, const topology::TopologyReport* topology) {
  json j;
  j["schema_version"] = kLayoutSchemaVersion;
  json cfg;
  cfg["wall_thickness"] = doc.config.wall_thickness;
  cfg["tolerance"] = doc.config.tolerance;
  cfg["min_wall"] = doc.config.min_wall;
  cfg["door_width"] = doc.config.door_width;
  cfg["level"] = doc.config.level;
  j["config"] = cfg;

  json modules = json::array();
  for (const auto& m : doc.modules) {
    json e;
    e["id"] = m.id;
    e["label"] = m.label;
    e["level"] = m.level;
    e["origin"] = m.origin;
    e["retired"] = m.retired;
    e["sources"] = m.sources;
    e["rect"] = rect(m.rect);
    e["region"] = region(m.region);
    e["walls"] = m.walls;
    e["floor"] = m.floor;
    modules.push_back(std::move(e));
  }
  j["modules"] = std::move(modules);

  json units = json::array();
  for (const auto& u : doc.units) {
    json e;
    e["id"] = u.id;
    e["label"] = u.label;
    e["modules"] = u.modules;
    e["region"] = region(u.region);
    json outline = json::array();
    for (const auto& p : u.boundary.vertices) outline.push_back(point(p));
    e["boundary"] = std::move(outline);
    e["rooms"] = u.rooms;
    units.push_back(std::move(e));
  }
  j["units"] = std::move(units);

  json rooms = json::array();
  for (const auto& r : doc.rooms) {
    json e;
    e["id"] = r.id;
    e["label"] = r.label;
    e["unit"] = r.unit;
    e["regular"] = r.regular;
    e["region"] = region(r.region);
    e["rect"] = rect(r.rect);
    e["center"] = point(r.center);
    e["hosts"] = r.hosts;
    json open = json::array();
    for (auto s : r.open_sides) open.push_back(std::string(kernel::to_string(s)));
    e["open_sides"] = std::move(open);
    rooms.push_back(std::move(e));
  }
  j["rooms"] = std::move(rooms);

  json walls = json::array();
  for (const auto& [id, w] : doc.walls) {
    json e;
    e["id"] = id;
    e["start"] = point(w.centerline.a);
    e["end"] = point(w.centerline.b);
    e["thickness"] = w.thickness;
    e["room_bounding"] = w.room_bounding;
    e["openings"] = w.openings;
    walls.push_back(std::move(e));
  }
  j["walls"] = std::move(walls);

  json floors = json::array();
  for (const auto& f : doc.floors) {
    json e;
    e["id"] = f.id;
    e["module"] = f.module;
    e["region"] = region(f.region);
    floors.push_back(std::move(e));
  }
  j["floors"] = std::move(floors);

  json doors = json::array(), holes = json::array();
  for (const auto& o : doc.doors) doors.push_back(opening(o));
  for (const auto& o : doc.holes) holes.push_back(opening(o));
  j["doors"] = std::move(doors);
  j["holes"] = std::move(holes);

  json log = json::array();
  for (const auto& l : doc.log) {
    json e;
    e["statement"] = l.statement;
    e["action"] = l.action;
    e["entity"] = l.entity;
    e["id"] = l.id;
    log.push_back(std::move(e));
  }
  j["log"] = std::move(log);
  j["next_id"] = doc.next_id;

  if (topology) {
    json t;
    t["module_adjacency"] = matrix(topology->module_adjacency);
    t["room_adjacency"] = matrix(topology->room_adjacency);
    t["module_connectivity"] = matrix(topology->module_connectivity);
    t["room_connectivity"] = matrix(topology->room_connectivity);
    t["room_conjoint"] = matrix(topology->room_conjoint);
    json verdicts = json::array();
    for (const auto& v : topology->containment) {
      json e;
      e["entity"] = v.entity;
      e["id"] = v.id;
      e["name"] = v.name;
      e["excess"] = v.excess;
      e["pass"] = v.pass;
      verdicts.push_back(std::move(e));
    }
    t["containment"] = std::move(verdicts);
    j["topology"] = std::move(t);
  }
  return j.dump(2) + "\n";
}

kernel::LayoutDocument import_layout_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("not JSON: ") + e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kLayoutSchemaVersion) {
      throw SchemaError("unsupported schema_version " + j.at("schema_version").dump());
    }
    kernel::LayoutDocument doc;
    const auto& c = j.at("config");
    doc.config.wall_thickness = c.at("wall_thickness").get<double>();
    doc.config.tolerance = c.at("tolerance").get<double>();
    doc.config.min_wall = c.at("min_wall").get<double>();
    doc.config.door_width = c.at("door_width").get<double>();
    doc.config.level = c.at("level").get<std::string>();
    for (const auto& e : j.at("modules")) {
      kernel::ModuleEntity m;
      m.id = e.at("id").get<int>();
      m.label = e.at("label").get<std::string>();
      m.level = e.at("level").get<std::string>();
      m.origin = e.at("origin").get<std::string>();
      m.retired = e.at("retired").get<bool>();
      m.sources = e.at("sources").get<std::vector<int>>();
      m.rect = to_rect(e.at("rect"));
      m.region = to_region(e.at("region"));
      m.walls = e.at("walls").get<std::vector<int>>();
      m.floor = e.at("floor").get<int>();
      doc.modules.push_back(std::move(m));
    }
    for (const auto& e : j.at("units")) {
      kernel::UnitEntity u;
      u.id = e.at("id").get<int>();
      u.label = e.at("label").get<std::string>();
      u.modules = e.at("modules").get<std::vector<int>>();
      u.region = to_region(e.at("region"));
      for (const auto& p : e.at("boundary")) u.boundary.vertices.push_back(to_point(p));
      u.rooms = e.at("rooms").get<std::vector<int>>();
      doc.units.push_back(std::move(u));
    }
    for (const auto& e : j.at("rooms")) {
      kernel::RoomEntity r;
      r.id = e.at("id").get<int>();
      r.label = e.at("label").get<std::string>();
      r.unit = e.at("unit").get<int>();
      r.regular = e.at("regular").get<bool>();
      r.region = to_region(e.at("region"));
      r.rect = to_rect(e.at("rect"));
      r.center = to_point(e.at("center"));
      r.hosts = e.at("hosts").get<std::vector<int>>();
      for (const auto& s : e.at("open_sides")) r.open_sides.push_back(side(s));
      doc.rooms.push_back(std::move(r));
    }
    for (const auto& e : j.at("walls")) {
      kernel::Wall w;
      w.id = e.at("id").get<int>();
      w.centerline = {to_point(e.at("start")), to_point(e.at("end"))};
      w.thickness = e.at("thickness").get<double>();
      w.room_bounding = e.at("room_bounding").get<bool>();
      w.openings = e.at("openings").get<std::vector<int>>();
      doc.walls.emplace(w.id, std::move(w));
    }
    for (const auto& e : j.at("floors")) {
      doc.floors.push_back({e.at("id").get<int>(), e.at("module").get<int>(), to_region(e.at("region"))});
    }
    for (const auto& e : j.at("doors")) doc.doors.push_back(to_opening(e, kernel::OpeningKind::Door));
    for (const auto& e : j.at("holes")) doc.holes.push_back(to_opening(e, kernel::OpeningKind::Hole));
    for (const auto& e : j.at("log")) {
      doc.log.push_back({e.at("statement").get<std::size_t>(), e.at("action").get<std::string>(),
                         e.at("entity").get<std::string>(), e.at("id").get<int>()});
    }
    doc.next_id = j.at("next_id").get<int>();
    return doc;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed layout: ") + e.what());
  }
}

}  // namespace mbl::harness
