// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/kernel/operations.hpp"

#include <algorithm>
#include <cmath>

#include "mbl/dsl/canonical.hpp"
#include "mbl/geom/ops.hpp"

namespace mbl::kernel {

using geom::Point;
using geom::Rect;
using geom::Region;
using geom::Segment;

std::string_view to_string(ExecCategory c) {
  switch (c) {
    case ExecCategory::ContainmentViolation: return "containment-violation";
    case ExecCategory::Overlap: return "overlap";
    case ExecCategory::WallNotFound: return "wall-not-found";
    case ExecCategory::BadRatio: return "bad-ratio";
    case ExecCategory::MergeNotAdjacent: return "merge-not-adjacent";
    case ExecCategory::HostTooSmall: return "host-too-small";
    case ExecCategory::DegenerateDimension: return "degenerate-dimension";
    case ExecCategory::Disconnected: return "disconnected";
    case ExecCategory::HasHole: return "has-hole";
    case ExecCategory::NoResidualSpace: return "no-residual-space";
    case ExecCategory::RetiredEntity: return "retired-entity";
    case ExecCategory::UndefinedEntity: return "undefined-entity";
    case ExecCategory::NotCompiled: return "not-compiled";
  }
  return "?";
}

std::optional<Corner> corner_from_string(std::string_view s) {
  if (s == "northeast") return Corner{Side::North, Side::East};
  if (s == "northwest") return Corner{Side::North, Side::West};
  if (s == "southeast") return Corner{Side::South, Side::East};
  if (s == "southwest") return Corner{Side::South, Side::West};
  return std::nullopt;
}

namespace {

[[noreturn]] void fail(ExecCategory c, const std::string& m) { throw ExecFailure(c, m); }

bool north_south(Side s) { return s == Side::North || s == Side::South; }

Point step(Side s, double d) {
  switch (s) {
    case Side::North: return {0.0, d};
    case Side::South: return {0.0, -d};
    case Side::East: return {d, 0.0};
    case Side::West: return {-d, 0.0};
  }
  return {};
}

double tol(const LayoutDocument& doc) { return doc.config.tolerance; }

void require_extent(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0)) fail(ExecCategory::DegenerateDimension, std::string(what) + " must be positive");
}

// Flush against `direction` side of `ref`, the `alignment` edges coplanar
// (none: centred), then shifted.
Rect place_relative(const Rect& ref, Side direction, double length, double width, std::optional<Side> alignment,
                    std::optional<Side> offset_direction, double offset) {
  Point at;
  if (alignment && north_south(*alignment) == north_south(direction)) alignment.reset();
  if (north_south(direction)) {
    at.y = direction == Side::North ? ref.max.y : ref.min.y - width;
    if (!alignment) {
      at.x = ref.center().x - length / 2.0;
    } else {
      at.x = *alignment == Side::West ? ref.min.x : ref.max.x - length;
    }
  } else {
    at.x = direction == Side::East ? ref.max.x : ref.min.x - length;
    if (!alignment) {
      at.y = ref.center().y - width / 2.0;
    } else {
      at.y = *alignment == Side::South ? ref.min.y : ref.max.y - width;
    }
  }
  Rect r = Rect::from_extent(at, length, width);
  if (offset_direction && offset != 0.0) r = r.translated(step(*offset_direction, offset));
  return r;
}

ModuleEntity& live_module(LayoutDocument& doc, int id) {
  auto* m = doc.module(id);
  if (!m) fail(ExecCategory::UndefinedEntity, "no module with id " + std::to_string(id));
  if (m->retired) fail(ExecCategory::RetiredEntity, "module '" + m->label + "' no longer exists");
  return *m;
}

struct Span {
  bool horizontal;
  double coord;
  double lo;
  double hi;
};

Span span_of(const Segment& s, double t) {
  if (s.horizontal(t)) return {true, s.a.y, std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x)};
  return {false, s.a.x, std::min(s.a.y, s.b.y), std::max(s.a.y, s.b.y)};
}

Segment segment_of(bool horizontal, double coord, double lo, double hi) {
  if (horizontal) return {{lo, coord}, {hi, coord}};
  return {{coord, lo}, {coord, hi}};
}

bool on_line(const Wall& w, const Span& s, double t) {
  const Span ws = span_of(w.centerline, t);
  return ws.horizontal == s.horizontal && std::abs(ws.coord - s.coord) <= t;
}

void erase_opening(LayoutDocument& doc, int id) {
  auto drop = [id](std::vector<Opening>& v) {
    v.erase(std::remove_if(v.begin(), v.end(), [id](const Opening& o) { return o.id == id; }), v.end());
  };
  drop(doc.doors);
  drop(doc.holes);
}

void retarget_openings(LayoutDocument& doc, int from, int to) {
  for (auto* v : {&doc.doors, &doc.holes}) {
    for (auto& o : *v) {
      if (o.wall == from) o.wall = to;
    }
  }
}

// Pieces of `seg` not covered by any of the collinear `skip` segments.
std::vector<Segment> minus(const Segment& seg, const std::vector<Segment>& skip, double t) {
  const Span s = span_of(seg, t);
  std::vector<std::pair<double, double>> keep{{s.lo, s.hi}};
  for (const auto& k : skip) {
    const Span ks = span_of(k, t);
    if (ks.horizontal != s.horizontal || std::abs(ks.coord - s.coord) > t) continue;
    std::vector<std::pair<double, double>> next;
    for (auto [lo, hi] : keep) {
      if (ks.hi <= lo + t || ks.lo >= hi - t) {
        next.emplace_back(lo, hi);
        continue;
      }
      if (ks.lo > lo + t) next.emplace_back(lo, ks.lo);
      if (ks.hi < hi - t) next.emplace_back(ks.hi, hi);
    }
    keep = std::move(next);
  }
  std::vector<Segment> out;
  for (auto [lo, hi] : keep) out.push_back(segment_of(s.horizontal, s.coord, lo, hi));
  return out;
}

std::vector<Segment> open_side_segments(const LayoutDocument& doc) {
  std::vector<Segment> out;
  for (const auto& r : doc.rooms) {
    for (Side s : r.open_sides) out.push_back(side_segment(r.region.bounds(), s));
  }
  return out;
}

void add_floor(LayoutDocument& doc, ModuleEntity& m) {
  Floor f{doc.next_id++, m.id, m.region};
  m.floor = f.id;
  doc.floors.push_back(std::move(f));
}

void drop_floor(LayoutDocument& doc, int module) {
  doc.floors.erase(std::remove_if(doc.floors.begin(), doc.floors.end(),
                                  [module](const Floor& f) { return f.module == module; }),
                   doc.floors.end());
}

void refresh_module_walls(LayoutDocument& doc) {
  const double t = tol(doc);
  for (auto& m : doc.modules) {
    if (m.retired) continue;
    std::vector<int> ids;
    for (const auto& seg : m.region.boundary(t)) {
      for (int id : walls_on(doc, seg)) ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    m.walls = std::move(ids);
  }
}

// Room outlines keep their walls when module walls under them go away.
void restore_room_walls(LayoutDocument& doc) {
  const double t = tol(doc);
  const auto skip = open_side_segments(doc);
  for (const auto& r : doc.rooms) {
    for (const auto& seg : r.region.boundary(t)) {
      for (const auto& piece : minus(seg, skip, t)) ensure_wall(doc, piece);
    }
  }
}

int add_module(LayoutDocument& doc, std::string label, Region region, std::string origin, std::vector<int> sources) {
  const double t = tol(doc);
  for (const auto* other : doc.live_modules()) {
    if (geom::overlap_area(region, other->region, t) > t * t) {
      fail(ExecCategory::Overlap, "module '" + label + "' overlaps module '" + other->label + "'");
    }
  }
  ModuleEntity m;
  m.id = doc.next_id++;
  m.label = std::move(label);
  m.rect = region.bounds();
  m.region = std::move(region);
  m.level = doc.config.level;
  m.origin = std::move(origin);
  m.sources = std::move(sources);
  add_floor(doc, m);
  for (const auto& seg : m.region.boundary(t)) ensure_wall(doc, seg);
  doc.modules.push_back(std::move(m));
  refresh_module_walls(doc);
  return doc.modules.back().id;
}

void replace_members(std::vector<int>& list, int old_id, const std::vector<int>& with) {
  auto it = std::find(list.begin(), list.end(), old_id);
  if (it == list.end()) return;
  it = list.erase(it);
  for (int id : with) {
    if (std::find(list.begin(), list.end(), id) == list.end()) it = std::next(list.insert(it, id));
  }
}

const UnitEntity& unit_of(const LayoutDocument& doc, int id) {
  const auto* u = doc.unit(id);
  if (!u) fail(ExecCategory::UndefinedEntity, "no unit with id " + std::to_string(id));
  return *u;
}

Region host_area(LayoutDocument& doc, const RoomHost& h) {
  const auto& u = unit_of(doc, h.unit);
  if (!h.module) return u.region;
  const auto& m = live_module(doc, *h.module);
  if (std::find(u.modules.begin(), u.modules.end(), m.id) == u.modules.end()) {
    fail(ExecCategory::ContainmentViolation, "module '" + m.label + "' is not part of unit '" + u.label + "'");
  }
  Region area = Region::intersect(u.region, m.region, tol(doc));
  if (area.area() <= tol(doc) * tol(doc)) {
    fail(ExecCategory::ContainmentViolation, "module '" + m.label + "' has no area inside unit '" + u.label + "'");
  }
  return area;
}

Region rooms_union(const LayoutDocument& doc) {
  std::vector<Rect> parts;
  for (const auto& r : doc.rooms) parts.insert(parts.end(), r.region.parts().begin(), r.region.parts().end());
  return Region(std::move(parts));
}

// Sides of `r` that do not lie on the matching side of `container`.
std::vector<Side> interior_sides(const Rect& r, const Rect& container, double t) {
  std::vector<Side> out;
  if (std::abs(r.max.y - container.max.y) > t) out.push_back(Side::North);
  if (std::abs(r.min.y - container.min.y) > t) out.push_back(Side::South);
  if (std::abs(r.max.x - container.max.x) > t) out.push_back(Side::East);
  if (std::abs(r.min.x - container.min.x) > t) out.push_back(Side::West);
  return out;
}

bool inside(const Region& r, Point p) {
  return std::any_of(r.parts().begin(), r.parts().end(), [&](const Rect& q) { return geom::point_in_rect(p, q, 0.0); });
}

int place_room(LayoutDocument& doc, std::string label, int unit_id, Region nominal, std::vector<Side> open_sides,
               bool regular) {
  const double t = tol(doc);
  const double half = doc.config.wall_thickness / 2.0;
  if (nominal.empty()) fail(ExecCategory::DegenerateDimension, "room '" + label + "' has no area");
  const Rect bounds = nominal.bounds();
  const Rect inner{{bounds.min.x + half, bounds.min.y + half}, {bounds.max.x - half, bounds.max.y - half}};
  if (!inner.valid()) fail(ExecCategory::DegenerateDimension, "room '" + label + "' is thinner than its walls");
  const auto& u = unit_of(doc, unit_id);
  if (geom::excess_area(nominal, u.region, t) > t * geom::perimeter(nominal, t)) {
    fail(ExecCategory::ContainmentViolation, "room '" + label + "' extends outside unit '" + u.label + "'");
  }
  for (const auto& r : doc.rooms) {
    if (geom::overlap_area(nominal, r.region, t) > t * t) {
      fail(ExecCategory::Overlap, "room '" + label + "' overlaps room '" + r.label + "'");
    }
  }
  RoomEntity room;
  room.id = doc.next_id++;
  room.label = std::move(label);
  room.rect = inner;
  room.center = inner.center();
  if (!inside(nominal, room.center)) {
    // keep the label point inside the room itself, away from neighbours
    const auto& parts = nominal.parts();
    const auto biggest = std::max_element(parts.begin(), parts.end(),
                                          [](const Rect& a, const Rect& b) { return a.area() < b.area(); });
    room.center = biggest->center();
  }
  room.unit = unit_id;
  for (const auto* m : doc.live_modules()) {
    if (geom::overlap_area(nominal, m->region, t) > t * t) room.hosts.push_back(m->id);
  }
  room.open_sides = std::move(open_sides);
  room.regular = regular;
  room.region = std::move(nominal);

  auto skip = open_side_segments(doc);
  for (Side s : room.open_sides) skip.push_back(side_segment(bounds, s));
  for (const auto& seg : room.region.boundary(t)) {
    for (const auto& piece : minus(seg, skip, t)) ensure_wall(doc, piece);
  }
  doc.unit(unit_id)->rooms.push_back(room.id);
  doc.rooms.push_back(std::move(room));
  refresh_module_walls(doc);
  return doc.rooms.back().id;
}

int place_opening(LayoutDocument& doc, OpeningKind kind, std::string host_kind, int host, const Rect& host_rect,
                  const std::vector<Side>& open_sides, const OpeningSpec& spec) {
  const double t = tol(doc);
  const double half = doc.config.wall_thickness / 2.0;
  require_extent(spec.dimension, "opening width");
  if (std::find(open_sides.begin(), open_sides.end(), spec.direction) != open_sides.end()) {
    fail(ExecCategory::WallNotFound, "the " + std::string(to_string(spec.direction)) + " side is open");
  }
  const Segment side = side_segment(host_rect, spec.direction);
  const Span s = span_of(side, t);
  int best = 0;
  double best_len = 0.0, lo = 0.0, hi = 0.0;
  for (int id : walls_on(doc, side)) {
    const Span ws = span_of(doc.walls.at(id).centerline, t);
    const double a = std::max(ws.lo, s.lo), b = std::min(ws.hi, s.hi);
    if (b - a > best_len) {
      best = id;
      best_len = b - a;
      lo = a;
      hi = b;
    }
  }
  if (!best) fail(ExecCategory::WallNotFound, "no wall on the " + std::string(to_string(spec.direction)) + " side");
  lo += half;
  hi -= half;
  const double d = spec.dimension;
  if (d >= hi - lo) fail(ExecCategory::HostTooSmall, "the wall is too short for a " + dsl::format_number(d) + " mm opening");
  std::optional<Side> align = spec.alignment;
  if (align && north_south(*align) == north_south(spec.direction)) align.reset();
  double c = (lo + hi) / 2.0;
  if (align) {
    const bool low_end = *align == Side::West || *align == Side::South;
    c = low_end ? lo + spec.offset + d / 2.0 : hi - spec.offset - d / 2.0;
  }
  if (c - d / 2.0 < lo - t || c + d / 2.0 > hi + t) {
    fail(ExecCategory::HostTooSmall, "the offset pushes the opening past the end of the wall");
  }
  Opening o;
  o.id = doc.next_id++;
  o.kind = kind;
  o.wall = best;
  o.center = s.horizontal ? Point{c, s.coord} : Point{s.coord, c};
  o.dimension = d;
  o.set_mode = kind == OpeningKind::Door ? spec.set_mode : "none";
  o.set_dimension = kind == OpeningKind::Door ? spec.set_dimension : 0.0;
  o.host_kind = std::move(host_kind);
  o.host = host;
  o.side = spec.direction;
  doc.walls.at(best).openings.push_back(o.id);
  auto& list = kind == OpeningKind::Door ? doc.doors : doc.holes;
  list.push_back(o);
  return o.id;
}

}  // namespace

// ---- walls

std::vector<int> walls_on(const LayoutDocument& doc, Segment seg) {
  const double t = tol(doc);
  const Span s = span_of(seg, t);
  std::vector<int> out;
  for (const auto& [id, w] : doc.walls) {
    if (!on_line(w, s, t)) continue;
    const Span ws = span_of(w.centerline, t);
    if (std::min(ws.hi, s.hi) - std::max(ws.lo, s.lo) > t) out.push_back(id);
  }
  return out;
}

int ensure_wall(LayoutDocument& doc, Segment seg, bool room_bounding) {
  const double t = tol(doc);
  Span s = span_of(seg, t);
  if (s.hi - s.lo < doc.config.min_wall - t) return 0;
  std::vector<int> touching;
  for (const auto& [id, w] : doc.walls) {
    if (!on_line(w, s, t)) continue;
    const Span ws = span_of(w.centerline, t);
    if (ws.lo <= s.hi + t && s.lo <= ws.hi + t) touching.push_back(id);
  }
  if (touching.empty()) {
    Wall w;
    w.id = doc.next_id++;
    w.centerline = segment_of(s.horizontal, s.coord, s.lo, s.hi);
    w.thickness = doc.config.wall_thickness;
    w.room_bounding = room_bounding;
    doc.walls.emplace(w.id, w);
    return w.id;
  }
  const int keep = touching.front();  // map order: lowest id
  Wall& survivor = doc.walls.at(keep);
  const Span first = span_of(survivor.centerline, t);
  double lo = s.lo, hi = s.hi;
  for (int id : touching) {
    const Span ws = span_of(doc.walls.at(id).centerline, t);
    lo = std::min(lo, ws.lo);
    hi = std::max(hi, ws.hi);
  }
  survivor.room_bounding = survivor.room_bounding || room_bounding;
  for (int id : touching) {
    if (id == keep) continue;
    Wall& w = doc.walls.at(id);
    survivor.openings.insert(survivor.openings.end(), w.openings.begin(), w.openings.end());
    survivor.room_bounding = survivor.room_bounding || w.room_bounding;
    retarget_openings(doc, id, keep);
    doc.walls.erase(id);
  }
  doc.walls.at(keep).centerline = segment_of(first.horizontal, first.coord, lo, hi);
  return keep;
}

void remove_wall_segment(LayoutDocument& doc, Segment seg) {
  const double t = tol(doc);
  const Span s = span_of(seg, t);
  for (int id : walls_on(doc, seg)) {
    Wall w = doc.walls.at(id);
    const Span ws = span_of(w.centerline, t);
    std::vector<std::pair<double, double>> pieces;
    if (s.lo - ws.lo >= doc.config.min_wall - t) pieces.emplace_back(ws.lo, s.lo);
    if (ws.hi - s.hi >= doc.config.min_wall - t) pieces.emplace_back(s.hi, ws.hi);
    doc.walls.erase(id);
    std::vector<int> ids;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      Wall p = w;
      p.id = k == 0 ? id : doc.next_id++;
      p.centerline = segment_of(ws.horizontal, ws.coord, pieces[k].first, pieces[k].second);
      p.openings.clear();
      ids.push_back(p.id);
      doc.walls.emplace(p.id, p);
    }
    for (int oid : w.openings) {
      const Opening* o = doc.opening(oid);
      if (!o) continue;
      const double c = ws.horizontal ? o->center.x : o->center.y;
      const double half = o->dimension / 2.0;
      int owner = 0;
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (c - half > pieces[k].first && c + half < pieces[k].second) owner = ids[k];
      }
      if (owner) {
        doc.walls.at(owner).openings.push_back(oid);
        for (auto* v : {&doc.doors, &doc.holes}) {
          for (auto& op : *v) {
            if (op.id == oid) op.wall = owner;
          }
        }
      } else {
        erase_opening(doc, oid);
      }
    }
  }
  refresh_module_walls(doc);
}

// ---- modules

int create_module_absolute(LayoutDocument& doc, std::string label, Point anchor, double length, double width) {
  require_extent(length, "module length");
  require_extent(width, "module width");
  return add_module(doc, std::move(label), Region(Rect::from_extent(anchor, length, width)), "created", {});
}

int create_module_relative(LayoutDocument& doc, std::string label, int ref, Side direction, double length,
                           double width, std::optional<Side> alignment, std::optional<Side> offset_direction,
                           double offset) {
  require_extent(length, "module length");
  require_extent(width, "module width");
  const Rect at = place_relative(live_module(doc, ref).rect, direction, length, width, alignment, offset_direction,
                                 offset);
  return add_module(doc, std::move(label), Region(at), "created", {});
}

std::pair<int, int> split_module(LayoutDocument& doc, int module, SplitAxis axis, double ratio) {
  const double t = tol(doc);
  if (!(ratio > 0.0 && ratio < 1.0)) fail(ExecCategory::BadRatio, "split ratio must lie strictly between 0 and 1");
  ModuleEntity& m = live_module(doc, module);
  const Rect b = m.rect;
  Rect first, second;
  double e0 = 0.0, e1 = 0.0;
  std::string l0, l1;
  if (axis == SplitAxis::WestEast) {
    const double cut = b.max.y - ratio * b.width();
    first = Rect{{b.min.x, cut}, b.max};
    second = Rect{b.min, {b.max.x, cut}};
    e0 = first.width();
    e1 = second.width();
    l0 = " North";
    l1 = " South";
  } else {
    const double cut = b.min.x + ratio * b.length();
    first = Rect{b.min, {cut, b.max.y}};
    second = Rect{{cut, b.min.y}, b.max};
    e0 = first.length();
    e1 = second.length();
    l0 = " West";
    l1 = " East";
  }
  if (e0 < doc.config.min_wall - t || e1 < doc.config.min_wall - t) {
    fail(ExecCategory::DegenerateDimension, "a split piece of module '" + m.label + "' would be thinner than " +
                                                std::to_string(static_cast<int>(doc.config.min_wall)) + " mm");
  }
  Region r0 = Region::intersect(m.region, Region(first), t);
  Region r1 = Region::intersect(m.region, Region(second), t);
  if (r0.area() <= t * t || r1.area() <= t * t) {
    fail(ExecCategory::DegenerateDimension, "the cut misses module '" + m.label + "'");
  }
  const std::string label = m.label;
  m.retired = true;
  drop_floor(doc, module);
  const int a = add_module(doc, label + l0, r0, "split", {module});
  const int c = add_module(doc, label + l1, r1, "split", {module});
  for (const auto& seg : geom::shared_boundary(r0, r1, t)) ensure_wall(doc, seg);
  for (auto& u : doc.units) {
    std::vector<int> with;
    for (int p : {a, c}) {
      if (geom::overlap_area(doc.module(p)->region, u.region, t) > t * t) with.push_back(p);
    }
    replace_members(u.modules, module, with);
  }
  for (auto& r : doc.rooms) {
    std::vector<int> with;
    for (int p : {a, c}) {
      if (geom::overlap_area(doc.module(p)->region, r.region, t) > t * t) with.push_back(p);
    }
    replace_members(r.hosts, module, with);
  }
  refresh_module_walls(doc);
  return {a, c};
}

int merge_modules(LayoutDocument& doc, const std::vector<int>& modules) {
  const double t = tol(doc);
  std::vector<int> ids;
  for (int id : modules) {
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  if (ids.size() < 2) fail(ExecCategory::MergeNotAdjacent, "merging needs two distinct modules");
  std::vector<Rect> parts;
  for (int id : ids) {
    const auto& m = live_module(doc, id);
    parts.insert(parts.end(), m.region.parts().begin(), m.region.parts().end());
  }
  Region merged(std::move(parts));
  if (!merged.connected(t)) fail(ExecCategory::MergeNotAdjacent, "the modules do not share an edge");
  try {
    (void)merged.outline(t);
  } catch (const geom::GeometryError& e) {
    fail(e.kind() == geom::GeometryErrorKind::HasHole ? ExecCategory::HasHole : ExecCategory::MergeNotAdjacent,
         e.what());
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      for (const auto& seg : geom::shared_boundary(doc.module(ids[i])->region, doc.module(ids[j])->region, t)) {
        remove_wall_segment(doc, seg);
      }
    }
  }
  restore_room_walls(doc);
  const std::string label = doc.module(ids.front())->label;
  for (int id : ids) {
    doc.module(id)->retired = true;
    drop_floor(doc, id);
  }
  const int out = add_module(doc, label, merged, "merge", ids);
  for (auto& u : doc.units) {
    for (int id : ids) replace_members(u.modules, id, {out});
  }
  for (auto& r : doc.rooms) {
    for (int id : ids) replace_members(r.hosts, id, {out});
  }
  return out;
}

// ---- units

namespace {

int add_unit(LayoutDocument& doc, std::string label, std::vector<int> modules, Region region) {
  const double t = tol(doc);
  if (region.area() <= t * t) fail(ExecCategory::DegenerateDimension, "unit '" + label + "' has no area");
  if (!region.connected(t)) fail(ExecCategory::Disconnected, "unit '" + label + "' is not one connected piece");
  geom::Contour boundary;
  try {
    boundary = region.outline(t);
  } catch (const geom::GeometryError& e) {
    fail(e.kind() == geom::GeometryErrorKind::HasHole ? ExecCategory::HasHole : ExecCategory::Disconnected, e.what());
  }
  for (const auto& u : doc.units) {
    if (geom::overlap_area(region, u.region, t) > t * t) {
      fail(ExecCategory::Overlap, "unit '" + label + "' overlaps unit '" + u.label + "'");
    }
  }
  UnitEntity u;
  u.id = doc.next_id++;
  u.label = std::move(label);
  u.modules = std::move(modules);
  u.region = std::move(region);
  u.boundary = std::move(boundary);
  for (const auto& seg : u.region.boundary(t)) ensure_wall(doc, seg);
  doc.units.push_back(std::move(u));
  refresh_module_walls(doc);
  return doc.units.back().id;
}

std::vector<int> distinct_live(LayoutDocument& doc, const std::vector<int>& modules) {
  std::vector<int> ids;
  for (int id : modules) {
    live_module(doc, id);
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  if (ids.empty()) fail(ExecCategory::DegenerateDimension, "a unit needs at least one module");
  return ids;
}

}  // namespace

int create_unit_from_modules(LayoutDocument& doc, std::string label, const std::vector<int>& modules) {
  const auto ids = distinct_live(doc, modules);
  std::vector<Rect> parts;
  for (int id : ids) {
    const auto& r = doc.module(id)->region.parts();
    parts.insert(parts.end(), r.begin(), r.end());
  }
  return add_unit(doc, std::move(label), ids, Region(std::move(parts)));
}

int create_unit_directional(LayoutDocument& doc, std::string label, const std::vector<int>& modules, Side direction,
                            const std::vector<double>& dimensions) {
  const double t = tol(doc);
  if (dimensions.size() != modules.size()) {
    fail(ExecCategory::DegenerateDimension, "one dimension per module is required");
  }
  std::vector<Rect> parts;
  std::vector<int> members;
  for (std::size_t k = 0; k < modules.size(); ++k) {
    const auto& m = live_module(doc, modules[k]);
    const double d = dimensions[k];
    require_extent(d, "unit depth");
    const Rect b = m.rect;
    const double extent = north_south(direction) ? b.width() : b.length();
    if (d > extent + t) {
      fail(ExecCategory::HostTooSmall, "module '" + m.label + "' is only " + std::to_string(extent) + " mm deep");
    }
    Rect slab = b;
    switch (direction) {
      case Side::North: slab.min.y = b.max.y - d; break;
      case Side::South: slab.max.y = b.min.y + d; break;
      case Side::East: slab.min.x = b.max.x - d; break;
      case Side::West: slab.max.x = b.min.x + d; break;
    }
    const Region piece = Region::intersect(m.region, Region(slab), t);
    parts.insert(parts.end(), piece.parts().begin(), piece.parts().end());
    if (std::find(members.begin(), members.end(), m.id) == members.end()) members.push_back(m.id);
  }
  return add_unit(doc, std::move(label), members, Region(std::move(parts)));
}

// ---- rooms

int create_room_in_container(LayoutDocument& doc, std::string label, RoomHost host, bool regular) {
  const double t = tol(doc);
  const Region area = host_area(doc, host);
  if (regular) {
    const auto r = area.as_rect(t);
    if (!r) fail(ExecCategory::ContainmentViolation, "a regular room needs a rectangular host");
    return place_room(doc, std::move(label), host.unit, Region(*r), {}, true);
  }
  const Region residual = Region::subtract(area, rooms_union(doc), t);
  const auto comps = residual.components(t);
  const double wall = doc.config.wall_thickness;
  if (comps.empty() || comps.front().area() <= t * t) {
    fail(ExecCategory::NoResidualSpace, "no free area left for room '" + label + "'");
  }
  const Rect b = comps.front().bounds();
  if (b.length() <= wall || b.width() <= wall) {
    fail(ExecCategory::NoResidualSpace, "the free area left for room '" + label + "' is a sliver");
  }
  return place_room(doc, std::move(label), host.unit, comps.front(), {}, false);
}

int create_room_directional(LayoutDocument& doc, std::string label, RoomHost host, Side direction, double dimension,
                            bool open) {
  const double t = tol(doc);
  require_extent(dimension, "room depth");
  const Region area = host_area(doc, host);
  const Rect b = area.bounds();
  const double extent = north_south(direction) ? b.width() : b.length();
  if (dimension > extent + t) {
    fail(ExecCategory::HostTooSmall, "room '" + label + "' needs " + std::to_string(dimension) + " mm but the host is " +
                                         std::to_string(extent) + " mm deep");
  }
  Rect slab = b;
  switch (direction) {
    case Side::North: slab.min.y = b.max.y - dimension; break;
    case Side::South: slab.max.y = b.min.y + dimension; break;
    case Side::East: slab.min.x = b.max.x - dimension; break;
    case Side::West: slab.max.x = b.min.x + dimension; break;
  }
  const Region nominal(slab);
  if (geom::excess_area(nominal, area, t) > t * geom::perimeter(nominal, t)) {
    fail(ExecCategory::ContainmentViolation, "room '" + label + "' does not fit the host outline");
  }
  return place_room(doc, std::move(label), host.unit, nominal, open ? interior_sides(slab, b, t) : std::vector<Side>{},
                    true);
}

int create_room_corner(LayoutDocument& doc, std::string label, RoomHost host, Corner corner, double length,
                       double width, std::optional<Side> offset_direction, double offset, bool open) {
  const double t = tol(doc);
  require_extent(length, "room length");
  require_extent(width, "room width");
  const Region area = host_area(doc, host);
  const Rect b = area.bounds();
  if (length > b.length() + t || width > b.width() + t) {
    fail(ExecCategory::HostTooSmall, "room '" + label + "' is larger than its host");
  }
  const double x = corner.horizontal == Side::West ? b.min.x : b.max.x - length;
  const double y = corner.vertical == Side::South ? b.min.y : b.max.y - width;
  Rect r = Rect::from_extent({x, y}, length, width);
  if (offset_direction && offset != 0.0) r = r.translated(step(*offset_direction, offset));
  const Region nominal(r);
  if (geom::excess_area(nominal, area, t) > t * geom::perimeter(nominal, t)) {
    fail(ExecCategory::ContainmentViolation, "room '" + label + "' is pushed outside its host");
  }
  return place_room(doc, std::move(label), host.unit, nominal, open ? interior_sides(r, b, t) : std::vector<Side>{},
                    true);
}

int create_room_relative(LayoutDocument& doc, std::string label, int unit, int ref_room, Side direction,
                         double length, double width, std::optional<Side> alignment,
                         std::optional<Side> offset_direction, double offset, bool open) {
  const double t = tol(doc);
  require_extent(length, "room length");
  require_extent(width, "room width");
  const auto* ref = doc.room(ref_room);
  if (!ref) fail(ExecCategory::UndefinedEntity, "no room with id " + std::to_string(ref_room));
  const Rect r =
      place_relative(ref->region.bounds(), direction, length, width, alignment, offset_direction, offset);
  const Rect ub = unit_of(doc, unit).region.bounds();
  return place_room(doc, std::move(label), unit, Region(r), open ? interior_sides(r, ub, t) : std::vector<Side>{},
                    true);
}

int create_room_at_point(LayoutDocument& doc, std::string label, int unit, Point center, double length,
                         double width) {
  require_extent(length, "room length");
  require_extent(width, "room width");
  const double w = doc.config.wall_thickness;
  const double hx = (length + w) / 2.0, hy = (width + w) / 2.0;
  for (const auto& r : doc.rooms) {
    if (inside(r.region, center)) fail(ExecCategory::Overlap, "the centre lies inside room '" + r.label + "'");
  }
  const Rect nominal{{center.x - hx, center.y - hy}, {center.x + hx, center.y + hy}};
  return place_room(doc, std::move(label), unit, Region(nominal), {}, true);
}

// ---- elements

int create_door_for_room(LayoutDocument& doc, int room, const OpeningSpec& spec) {
  const auto* r = doc.room(room);
  if (!r) fail(ExecCategory::UndefinedEntity, "no room with id " + std::to_string(room));
  return place_opening(doc, OpeningKind::Door, "room", room, r->region.bounds(), r->open_sides, spec);
}

int create_door_for_module(LayoutDocument& doc, int module, const OpeningSpec& spec) {
  const Rect b = live_module(doc, module).rect;
  return place_opening(doc, OpeningKind::Door, "module", module, b, {}, spec);
}

int create_hole(LayoutDocument& doc, int module, const OpeningSpec& spec) {
  const Rect b = live_module(doc, module).rect;
  return place_opening(doc, OpeningKind::Hole, "module", module, b, {}, spec);
}

}  // namespace mbl::kernel
