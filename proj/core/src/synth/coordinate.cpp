// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/synth/coordinate.hpp"

#include <cstdio>
#include <regex>
#include <vector>

#include "mbl/dsl/canonical.hpp"

namespace mbl::synth {

namespace {

std::string one_decimal(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  std::string s = buf;
  if (s == "-0.0") s = "0.0";
  return s;
}

void entries(std::string& out, const std::string& label, const geom::Region& region, bool& first) {
  for (const auto& r : region.parts()) {
    if (!first) out += '\n';
    first = false;
    out += "[" + label + "|x=" + dsl::format_number(r.min.x) + "|y=" + dsl::format_number(r.min.y) +
           "|length=" + one_decimal(r.length()) + "|width=" + one_decimal(r.width()) + "]";
  }
}

}  // namespace

std::string to_coordinate_seq(const kernel::LayoutDocument& doc) {
  std::string out = "MODULE:\n";
  bool first = true;
  for (const auto* m : doc.live_modules()) entries(out, m->label, m->region, first);
  out += "\nUnit:\n";
  first = true;
  for (const auto& u : doc.units) entries(out, u.label, u.region, first);
  out += "\nRoom:\n";
  first = true;
  for (const auto& r : doc.rooms) entries(out, r.label, r.region, first);
  return out;
}

kernel::LayoutDocument parse_coordinate_seq(std::string_view text) {
  static const std::regex entry(
      R"(^\[(.+)\|x=(-?\d+(?:\.\d+)?)\|y=(-?\d+(?:\.\d+)?)\|length=(\d+(?:\.\d+)?)\|width=(\d+(?:\.\d+)?)\]$)");
  static const char* headers[] = {"MODULE:", "Unit:", "Room:"};

  using Group = std::pair<std::string, std::vector<geom::Rect>>;
  std::vector<Group> segments[3];
  int segment = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (segment < 2 && line == headers[segment + 1]) {
      ++segment;
      continue;
    }
    for (const char* h : headers) {
      if (line == h) throw FormatError(line_no, "segment '" + line + "' is out of order");
    }
    if (segment < 0) throw FormatError(line_no, "expected 'MODULE:' before any entry");
    std::smatch m;
    if (!std::regex_match(line, m, entry)) {
      throw FormatError(line_no, "expected [label|x=..|y=..|length=..|width=..], got '" + line + "'");
    }
    const double x = std::stod(m[2]), y = std::stod(m[3]), l = std::stod(m[4]), w = std::stod(m[5]);
    if (!(l > 0.0 && w > 0.0)) throw FormatError(line_no, "length and width must be positive");
    auto& groups = segments[segment];
    const std::string label = m[1];
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.first == label; });
    if (it == groups.end()) {
      groups.push_back({label, {}});
      it = std::prev(groups.end());
    }
    it->second.push_back(geom::Rect::from_extent({x, y}, l, w));
  }
  if (segment != 2) throw FormatError(line_no, std::string("missing segment '") + headers[segment + 1] + "'");

  kernel::LayoutDocument doc;
  for (auto& [label, rects] : segments[0]) {
    kernel::ModuleEntity e;
    e.id = doc.next_id++;
    e.label = label;
    e.region = geom::Region(rects);
    e.rect = e.region.bounds();
    e.origin = "created";
    doc.modules.push_back(std::move(e));
  }
  for (auto& [label, rects] : segments[1]) {
    kernel::UnitEntity e;
    e.id = doc.next_id++;
    e.label = label;
    e.region = geom::Region(rects);
    doc.units.push_back(std::move(e));
  }
  for (auto& [label, rects] : segments[2]) {
    kernel::RoomEntity e;
    e.id = doc.next_id++;
    e.label = label;
    e.region = geom::Region(rects);
    e.rect = e.region.bounds();
    e.center = e.rect.center();
    doc.rooms.push_back(std::move(e));
  }
  return doc;
}

std::optional<metrics::LayoutBoxes> parse_coordinate_boxes(std::string_view text) {
  try {
    return metrics::boxes_of(parse_coordinate_seq(text));
  } catch (const FormatError&) {
    return std::nullopt;
  }
}

}  // namespace mbl::synth
