// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/harness/svg.hpp"

#include <cmath>
#include <map>

#include "mbl/dsl/canonical.hpp"
#include "mbl/dsl/signatures.hpp"
#include "mbl/geom/ops.hpp"

namespace mbl::harness {

namespace {

using dsl::format_number;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* fill_for(const std::string& semantic) {
  static const std::map<std::string, const char*> palette{
      {"living room", "#f4e3b5"}, {"bedroom", "#c9dcf0"}, {"bathroom", "#c8ead9"}, {"kitchen", "#f2c9c0"}};
  const auto it = palette.find(semantic);
  return it == palette.end() ? "#e3e3e3" : it->second;
}

struct Frame {
  geom::Rect bounds;
  double margin;
  double x(double v) const { return v - bounds.min.x + margin; }
  double y(double v) const { return bounds.max.y - v + margin; }
  std::string pt(geom::Point p) const { return format_number(x(p.x)) + "," + format_number(y(p.y)); }
};

geom::Point inward(kernel::Side s) {
  switch (s) {
    case kernel::Side::North: return {0, -1};
    case kernel::Side::South: return {0, 1};
    case kernel::Side::East: return {-1, 0};
    case kernel::Side::West: return {1, 0};
  }
  return {};
}

void gap(std::string& out, const Frame& f, const kernel::Opening& o, bool horizontal, double thickness) {
  const double h = o.dimension / 2.0;
  const geom::Point a = horizontal ? geom::Point{o.center.x - h, o.center.y} : geom::Point{o.center.x, o.center.y - h};
  const geom::Point b = horizontal ? geom::Point{o.center.x + h, o.center.y} : geom::Point{o.center.x, o.center.y + h};
  out += "    <line x1=\"" + format_number(f.x(a.x)) + "\" y1=\"" + format_number(f.y(a.y)) + "\" x2=\"" +
         format_number(f.x(b.x)) + "\" y2=\"" + format_number(f.y(b.y)) + "\" stroke=\"#ffffff\" stroke-width=\"" +
         format_number(thickness + 2.0) + "\"/>\n";
}

}  // namespace

std::string render_svg(const kernel::LayoutDocument& doc, const SvgOptions& opts) {
  std::vector<geom::Rect> rects;
  for (const auto* m : doc.live_modules()) rects.push_back(m->rect);
  const Frame f{rects.empty() ? geom::Rect{} : geom::min_bounding_rect(rects), opts.margin};
  const double w = f.bounds.length() + 2 * opts.margin;
  const double h = f.bounds.width() + 2 * opts.margin;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_number(std::round(w * opts.scale)) +
         "\" height=\"" + format_number(std::round(h * opts.scale)) + "\" viewBox=\"0 0 " + format_number(w) + " " +
         format_number(h) + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  out += "  <g id=\"rooms\" stroke=\"none\" shape-rendering=\"crispEdges\">\n";
  for (const auto& r : doc.rooms) {
    for (const auto& p : r.region.parts()) {
      out += "    <rect x=\"" + format_number(f.x(p.min.x)) + "\" y=\"" + format_number(f.y(p.max.y)) +
             "\" width=\"" + format_number(p.length()) + "\" height=\"" + format_number(p.width()) + "\" fill=\"" +
             fill_for(dsl::semantic_label(r.label)) + "\"/>\n";
    }
  }
  out += "  </g>\n";

  out += "  <g id=\"modules\" fill=\"none\" stroke=\"#7a7a7a\" stroke-width=\"20\" stroke-dasharray=\"120 60\">\n";
  for (const auto* m : doc.live_modules()) {
    for (const auto& p : m->region.parts()) {
      out += "    <rect x=\"" + format_number(f.x(p.min.x)) + "\" y=\"" + format_number(f.y(p.max.y)) +
             "\" width=\"" + format_number(p.length()) + "\" height=\"" + format_number(p.width()) + "\"/>\n";
    }
  }
  out += "  </g>\n";

  out += "  <g id=\"walls\" stroke=\"#222222\" stroke-linecap=\"square\">\n";
  for (const auto& [id, wall] : doc.walls) {
    out += "    <line x1=\"" + format_number(f.x(wall.centerline.a.x)) + "\" y1=\"" +
           format_number(f.y(wall.centerline.a.y)) + "\" x2=\"" + format_number(f.x(wall.centerline.b.x)) +
           "\" y2=\"" + format_number(f.y(wall.centerline.b.y)) + "\" stroke-width=\"" +
           format_number(wall.thickness) + "\"/>\n";
  }
  out += "  </g>\n";

  out += "  <g id=\"holes\">\n";
  for (const auto& o : doc.holes) {
    const auto it = doc.walls.find(o.wall);
    const bool horizontal = it != doc.walls.end() ? it->second.horizontal() : (o.side == kernel::Side::North || o.side == kernel::Side::South);
    const double t = it != doc.walls.end() ? it->second.thickness : doc.config.wall_thickness;
    gap(out, f, o, horizontal, t);
    // two jamb ticks across the wall mark the opening
    for (double s : {-1.0, 1.0}) {
      const geom::Point c = horizontal ? geom::Point{o.center.x + s * o.dimension / 2, o.center.y}
                                       : geom::Point{o.center.x, o.center.y + s * o.dimension / 2};
      const geom::Point d = horizontal ? geom::Point{0, t / 2} : geom::Point{t / 2, 0};
      out += "    <line x1=\"" + format_number(f.x(c.x - d.x)) + "\" y1=\"" + format_number(f.y(c.y - d.y)) +
             "\" x2=\"" + format_number(f.x(c.x + d.x)) + "\" y2=\"" + format_number(f.y(c.y + d.y)) +
             "\" stroke=\"#222222\" stroke-width=\"20\"/>\n";
    }
  }
  out += "  </g>\n";

  out += "  <g id=\"doors\" fill=\"none\" stroke=\"#b03a2e\" stroke-width=\"15\">\n";
  for (const auto& o : doc.doors) {
    const auto it = doc.walls.find(o.wall);
    const bool horizontal = it != doc.walls.end() ? it->second.horizontal() : (o.side == kernel::Side::North || o.side == kernel::Side::South);
    const double t = it != doc.walls.end() ? it->second.thickness : doc.config.wall_thickness;
    gap(out, f, o, horizontal, t);
    geom::Point n = inward(o.side);
    if (o.set_mode == "out") n = {-n.x, -n.y};
    const geom::Point along = horizontal ? geom::Point{1, 0} : geom::Point{0, 1};
    const double r = o.dimension;
    const geom::Point hinge{o.center.x - along.x * r / 2, o.center.y - along.y * r / 2};
    const geom::Point free{o.center.x + along.x * r / 2, o.center.y + along.y * r / 2};
    const geom::Point leaf{hinge.x + n.x * r, hinge.y + n.y * r};
    // y flips in the output, so the sweep flag follows the handedness there
    const double cross = (leaf.x - hinge.x) * (free.y - hinge.y) - (leaf.y - hinge.y) * (free.x - hinge.x);
    const int sweep = cross > 0 ? 1 : 0;
    out += "    <path d=\"M " + f.pt(hinge) + " L " + f.pt(leaf) + " A " + format_number(r) + " " +
           format_number(r) + " 0 0 " + std::to_string(sweep) + " " + f.pt(free) + "\"/>\n";
  }
  out += "  </g>\n";

  if (opts.labels) {
    out += "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"220\" text-anchor=\"middle\" fill=\"#333333\">\n";
    for (const auto& r : doc.rooms) {
      // an L-shaped room's centre can fall outside it; use its biggest piece
      geom::Point at = r.center;
      double best = -1;
      if (r.region.parts().size() > 1) {
        for (const auto& p : r.region.parts()) {
          if (p.area() > best) best = p.area(), at = p.center();
        }
      }
      out += "    <text x=\"" + format_number(f.x(at.x)) + "\" y=\"" + format_number(f.y(at.y)) + "\">" +
             escape(r.label) + "</text>\n";
    }
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace mbl::harness
