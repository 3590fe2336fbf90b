// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/synth/grammar.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "mbl/dsl/canonical.hpp"
#include "mbl/dsl/check.hpp"
#include "mbl/geom/region.hpp"
#include "mbl/kernel/execute.hpp"
#include "mbl/synth/random.hpp"
#include "mbl/topology/relations.hpp"

namespace mbl::synth {

namespace {

using Args = std::vector<std::pair<std::string, std::string>>;

const std::vector<std::string> kSides{"north", "south", "east", "west"};

std::string quote(const std::string& s) { return "\"" + s + "\""; }
std::string num(double v) { return dsl::format_number(v); }

std::string call(const std::string& callee, bool constructor, const Args& args) {
  std::string out = constructor ? "new " + callee + "(" : callee + "(";
  for (std::size_t k = 0; k < args.size(); ++k) out += (k ? ", " : "") + args[k].first + ": " + args[k].second;
  return out + ")";
}

std::string list_of(const std::vector<std::string>& names) {
  std::string out = "new List<Module> { ";
  for (std::size_t k = 0; k < names.size(); ++k) out += (k ? ", " : "") + names[k];
  return out + " }";
}

bool vertical(const std::string& side) { return side == "north" || side == "south"; }

std::vector<std::string> perpendicular_to(const std::string& side) {
  return vertical(side) ? std::vector<std::string>{"east", "west"} : std::vector<std::string>{"north", "south"};
}

std::string opposite(const std::string& s) {
  if (s == "north") return "south";
  if (s == "south") return "north";
  if (s == "east") return "west";
  return "east";
}

std::string snake(const std::string& label) {
  std::string out;
  for (char c : label) out += c == ' ' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct RoomInfo {
  std::string name;
  int id;
};

class Builder {
 public:
  Builder(const CodeGrammar& g, Rng& rng) : g_(g), rng_(rng) {}

  bool run() {
    if (!modules()) return false;
    if (rng_.chance(g_.split_probability)) split();
    if (live_.size() >= 3 && rng_.chance(g_.merge_probability)) merge();
    if (!units()) return false;
    for (const auto& u : units_) rooms_for(u);
    if (rooms_.empty()) return false;
    elements();
    return true;
  }

  const std::string& source() const { return source_; }

 private:
  struct Mod {
    std::string name;
    int id;
  };
  struct UnitInfo {
    std::string name;
    int id;
    std::vector<Mod> members;
  };

  const kernel::LayoutDocument& doc() const { return ex_.document(); }
  double tol() const { return doc().config.tolerance; }

  // Applies one statement; on failure nothing changes.
  std::optional<std::vector<int>> emit(const std::string& text) {
    auto parsed = dsl::parse_program(text);
    if (!parsed.ok() || parsed.program.statements.size() != 1) return std::nullopt;
    const std::size_t index = count_;
    if (ex_.apply(parsed.program.statements.front(), index)) return std::nullopt;
    ++count_;
    source_ += dsl::canonical_statement(parsed.program.statements.front()) + "\n";
    std::vector<int> ids;
    for (const auto& e : doc().log) {
      if (e.statement == index) ids.push_back(e.id);
    }
    return ids;
  }

  double dim(double lo, double hi) { return rng_.snapped(lo, std::max(lo, hi), g_.step); }

  bool modules() {
    const int n = static_cast<int>(rng_.weighted(g_.module_count_weights));
    for (int k = 1; k <= std::max(1, n); ++k) {
      bool placed = false;
      for (int t = 0; t < g_.statement_tries && !placed; ++t) {
        const std::string name = "module_" + std::to_string(k);
        const std::string label = "Module " + std::to_string(k);
        const double l = dim(g_.module_min, g_.module_max), w = dim(g_.module_min, g_.module_max);
        std::string text;
        if (k == 1) {
          text = "Module " + name + " = " +
                 call("Module", true, {{"name", quote(label)}, {"point", "initial_point"}, {"length", num(l)},
                                       {"width", num(w)}}) + ";";
        } else {
          const Mod& ref = live_[rng_.below(live_.size())];
          const std::string dir = rng_.pick(kSides);
          Args args{{"name", quote(label)}, {"module", ref.name}, {"direction", quote(dir)}, {"length", num(l)},
                    {"width", num(w)}};
          if (rng_.chance(0.6)) {
            const std::string align = rng_.pick(perpendicular_to(dir));
            args.push_back({"alignment", quote(align)});
            if (rng_.chance(0.25)) {
              const auto& r = doc().module(ref.id)->rect;
              const double along = vertical(dir) ? std::min(l, r.length()) : std::min(w, r.width());
              args.push_back({"offset_direction", quote(opposite(align))});
              args.push_back({"offset", num(dim(100, along / 3.0))});
            }
          }
          text = "Module " + name + " = " + call("Module", true, args) + ";";
        }
        if (auto ids = emit(text)) {
          live_.push_back({name, ids->front()});
          placed = true;
        }
      }
      if (!placed && k == 1) return false;
    }
    return true;
  }

  void split() {
    std::vector<std::size_t> order(live_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[rng_.below(k)]);
    for (std::size_t idx : order) {
      const Mod m = live_[idx];
      const auto& r = doc().module(m.id)->rect;
      const bool we = rng_.chance(0.5);
      const double extent = we ? r.width() : r.length();
      if (extent < 3000.0) continue;
      const std::vector<double> ratios{0.3, 0.4, 0.5, 0.6, 0.7};
      const double ratio = rng_.pick(ratios);
      const std::string list = "pieces_" + std::to_string(++lists_);
      const std::string a = m.name + (we ? "_north" : "_west");
      const std::string b = m.name + (we ? "_south" : "_east");
      const std::string text =
          "List<Module> " + list + " = " +
          call("Utils.SplitModule", false,
               {{"module", m.name}, {"direction", quote(we ? "west-east" : "north-south")}, {"ratio", num(ratio)}}) +
          ";\nModule " + a + " = " + list + "[0];\nModule " + b + " = " + list + "[1];";
      auto parsed = dsl::parse_program(text);
      if (!parsed.ok()) continue;
      const std::size_t index = count_;
      if (ex_.apply(parsed.program.statements.front(), index)) continue;
      ++count_;
      source_ += dsl::canonical_statement(parsed.program.statements.front()) + "\n";
      std::vector<int> ids;
      for (const auto& e : doc().log) {
        if (e.statement == index) ids.push_back(e.id);
      }
      live_.erase(live_.begin() + static_cast<long>(idx));
      live_.push_back({a, ids[0]});
      live_.push_back({b, ids[1]});
      return;
    }
  }

  double contact(int a, int b) const {
    return geom::shared_boundary_length(doc().module(a)->region, doc().module(b)->region, tol());
  }

  void merge() {
    for (std::size_t i = 0; i < live_.size(); ++i) {
      for (std::size_t j = i + 1; j < live_.size(); ++j) {
        if (contact(live_[i].id, live_[j].id) < 1000.0 || !rng_.chance(0.5)) continue;
        const std::string text = call("Utils.MergeModules", false, {{"modules", list_of({live_[i].name, live_[j].name})}}) + ";";
        if (auto ids = emit(text)) {
          live_[i].id = ids->front();
          live_.erase(live_.begin() + static_cast<long>(j));
          return;
        }
      }
    }
  }

  bool units() {
    const std::size_t want = std::min(live_.size(), std::max<std::size_t>(1, rng_.weighted(g_.unit_count_weights)));
    std::vector<std::size_t> order(live_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[rng_.below(k)]);
    std::vector<int> group(live_.size(), -1);
    for (std::size_t k = 0; k < want; ++k) group[order[k]] = static_cast<int>(k);
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<std::pair<std::size_t, int>> options;
      for (std::size_t i = 0; i < live_.size(); ++i) {
        if (group[i] >= 0) continue;
        for (std::size_t j = 0; j < live_.size(); ++j) {
          if (group[j] >= 0 && contact(live_[i].id, live_[j].id) >= 600.0) options.push_back({i, group[j]});
        }
      }
      if (!options.empty()) {
        const auto [i, gidx] = options[rng_.below(options.size())];
        group[i] = gidx;
        grew = true;
      }
    }
    for (std::size_t k = 0; k < want; ++k) {
      std::vector<Mod> members;
      for (std::size_t i = 0; i < live_.size(); ++i) {
        if (group[i] == static_cast<int>(k)) members.push_back(live_[i]);
      }
      std::vector<std::string> names;
      for (const auto& m : members) names.push_back(m.name);
      const std::string name = "unit_" + std::to_string(k + 1);
      const std::string label = "Unit " + std::to_string(k + 1);
      std::optional<std::vector<int>> ids;
      if (rng_.chance(g_.directional_unit_probability)) {
        const std::string dir = rng_.pick(kSides);
        double depth = 1e18;
        for (const auto& m : members) {
          const auto& r = doc().module(m.id)->rect;
          depth = std::min(depth, vertical(dir) ? r.width() : r.length());
        }
        if (depth >= 2000.0) {
          const double d = dim(std::max(1500.0, depth * 0.6), depth);
          std::string dims = "new List<double> { ";
          for (std::size_t i = 0; i < members.size(); ++i) dims += (i ? ", " : "") + num(d);
          dims += " }";
          ids = emit("Unit " + name + " = " +
                     call("Unit", true, {{"name", quote(label)}, {"modules", list_of(names)},
                                         {"direction", quote(dir)}, {"dimensions", dims}}) + ";");
        }
      }
      if (!ids) {
        ids = emit("Unit " + name + " = " +
                   call("Unit", true, {{"name", quote(label)}, {"modules", list_of(names)}}) + ";");
      }
      if (!ids) return false;
      units_.push_back({name, ids->front(), members});
    }
    return true;
  }

  std::string next_label(const std::string& type) {
    const int n = ++type_counts_[type];
    return n == 1 ? type : type + " " + std::to_string(n);
  }

  std::string small_type() {
    static const std::vector<double> w{0.05, 0.45, 0.3, 0.2};
    return g_.room_types[rng_.weighted(w) % g_.room_types.size()];
  }

  std::string big_type() {
    static const std::vector<double> w{0.6, 0.3, 0.02, 0.08};
    return g_.room_types[rng_.weighted(w) % g_.room_types.size()];
  }

  std::optional<int> room(const std::string& type, Args args) {
    const std::string label = next_label(type);
    const std::string name = snake(label);
    args.insert(args.begin(), {"name", quote(label)});
    if (auto ids = emit("Room " + name + " = " + call("Room", true, args) + ";")) {
      rooms_.push_back({name, ids->front()});
      return ids->front();
    }
    --type_counts_[type];
    return std::nullopt;
  }

  Args host(const UnitInfo& u, const Mod& m) { return {{"module", m.name}, {"unit", u.name}}; }

  void rooms_for(const UnitInfo& u) {
    for (const auto& m : u.members) {
      const geom::Region area = geom::Region::intersect(doc().unit(u.id)->region, doc().module(m.id)->region, tol());
      if (area.empty()) continue;
      const geom::Rect b = area.bounds();
      const bool rect = area.as_rect(tol()).has_value();
      const double roll = rng_.unit();
      if (std::min(b.length(), b.width()) < 2600.0 || roll < 0.25) {
        fill(u, m, rect && rng_.chance(0.8));
        continue;
      }
      if (roll < 0.55) {
        const std::string side = rng_.pick(kSides);
        const double extent = vertical(side) ? b.width() : b.length();
        auto args = host(u, m);
        args.push_back({"direction", quote(side)});
        args.push_back({"dimension", num(dim(g_.room_min + 200, std::min(g_.room_max, extent - 1200)))});
        args.push_back({"open", rng_.chance(0.3) ? "true" : "false"});
        room(small_type(), args);
      } else if (roll < 0.8) {
        const std::vector<std::string> corners{"northeast", "northwest", "southeast", "southwest"};
        auto args = host(u, m);
        args.push_back({"corner", quote(rng_.pick(corners))});
        args.push_back({"length", num(dim(g_.room_min + 200, std::min(4000.0, b.length() - 1200)))});
        args.push_back({"width", num(dim(g_.room_min + 200, std::min(4000.0, b.width() - 1200)))});
        args.push_back({"offset_direction", quote("none")});
        args.push_back({"offset", "0"});
        args.push_back({"open", rng_.chance(0.25) ? "true" : "false"});
        room(small_type(), args);
      } else if (roll < 0.95) {
        // a strip room, then a neighbour against it
        const std::string side = rng_.pick(kSides);
        const double extent = vertical(side) ? b.width() : b.length();
        const double across = vertical(side) ? b.length() : b.width();
        const double depth = dim(g_.room_min + 200, std::min(3000.0, extent / 2.0 - 200));
        auto args = host(u, m);
        args.push_back({"direction", quote(side)});
        args.push_back({"dimension", num(depth)});
        args.push_back({"open", "false"});
        const auto first = room(small_type(), args);
        if (first && extent - depth >= 2400.0 && across >= 2400.0) {
          const RoomInfo ref = rooms_.back();
          const std::string align = rng_.pick(perpendicular_to(side));
          for (int t = 0; t < 4; ++t) {
            const double l = vertical(side) ? dim(g_.room_min + 200, across - 1200) : dim(g_.room_min + 200, extent - depth - 1200);
            const double w = vertical(side) ? dim(g_.room_min + 200, extent - depth - 1200) : dim(g_.room_min + 200, across - 1200);
            Args rel{{"unit", u.name}, {"room", ref.name}, {"direction", quote(opposite(side))}, {"length", num(l)},
                     {"width", num(w)}, {"alignment", quote(align)}, {"offset_direction", quote("none")},
                     {"offset", "0"}, {"open", rng_.chance(0.3) ? "true" : "false"}};
            if (room(small_type(), rel)) break;
          }
        }
      } else {
        const geom::Point c = b.center();
        const double l = dim(g_.room_min, std::min(3000.0, b.length() / 2.0));
        const double w = dim(g_.room_min, std::min(3000.0, b.width() / 2.0));
        room(small_type(), {{"unit", u.name},
                            {"center", "new Point(" + num(c.x) + ", " + num(c.y) + ")"},
                            {"length", num(l)},
                            {"width", num(w)}});
      }
      fill(u, m, false);
    }
  }

  void fill(const UnitInfo& u, const Mod& m, bool regular) {
    auto args = host(u, m);
    args.push_back({"regular", regular ? "true" : "false"});
    if (!room(big_type(), args) && regular) {
      args.back().second = "false";
      room(big_type(), args);
    }
  }

  Args opening_tail(const std::string& side, bool allow_align) {
    Args a;
    if (allow_align && rng_.chance(0.5)) {
      a.push_back({"alignment", quote(rng_.pick(perpendicular_to(side)))});
      a.push_back({"offset", num(rng_.snapped(0, 600, 100))});
    }
    a.push_back({"set", quote(rng_.chance(0.7) ? "in" : "out")});
    a.push_back({"set_dimension", rng_.chance(0.25) ? "600" : "0"});
    const std::vector<double> widths{800, 900, 1000};
    a.push_back({"dimension", num(rng_.pick(widths))});
    return a;
  }

  void elements() {
    const std::size_t want = rng_.weighted(g_.element_count_weights);
    std::size_t made = 0;
    for (int t = 0; made < want && t < static_cast<int>(want) * g_.statement_tries; ++t) {
      const double roll = rng_.unit();
      const std::string side = rng_.pick(kSides);
      std::string text;
      if (roll < 0.55) {
        const auto& r = rooms_[rng_.below(rooms_.size())];
        Args a{{"room", r.name}, {"direction", quote(side)}};
        for (auto& x : opening_tail(side, true)) a.push_back(x);
        text = call("Utils.CreateDoorForRoom", false, a) + ";";
      } else if (roll < 0.7) {
        const auto& m = live_[rng_.below(live_.size())];
        Args a{{"module", m.name}, {"direction", quote(side)}};
        for (auto& x : opening_tail(side, true)) a.push_back(x);
        text = call("Utils.CreateDoorForModule", false, a) + ";";
      } else if (roll < 0.8) {
        const bool for_room = rng_.chance(0.6);
        Args a{{for_room ? "room" : "module",
                for_room ? rooms_[rng_.below(rooms_.size())].name : live_[rng_.below(live_.size())].name},
               {"direction", quote(side)}};
        for (auto& x : opening_tail(side, false)) a.push_back(x);
        text = call(for_room ? "Utils.CreateDoorOnMidpointForRoom" : "Utils.CreateDoorOnMidpointForModule", false, a) +
               ";";
      } else {
        const auto& m = live_[rng_.below(live_.size())];
        Args a{{"module", m.name}, {"direction", quote(side)}};
        if (rng_.chance(0.3)) {
          a.push_back({"alignment", quote(rng_.pick(perpendicular_to(side)))});
          a.push_back({"offset", num(rng_.snapped(0, 500, 100))});
        }
        const std::vector<double> widths{1000, 1500, 2000};
        a.push_back({"dimension", num(rng_.pick(widths))});
        text = call("Utils.CreateHole", false, a) + ";";
      }
      if (emit(text)) ++made;
    }
  }

  const CodeGrammar& g_;
  Rng& rng_;
  kernel::Executor ex_;
  std::string source_;
  std::size_t count_ = 0;
  int lists_ = 0;
  std::vector<Mod> live_;
  std::vector<UnitInfo> units_;
  std::vector<RoomInfo> rooms_;
  std::map<std::string, int> type_counts_;
};

bool acceptable(const dsl::Program& p) {
  const auto run = kernel::execute(p);
  if (!run.ok()) return false;
  for (const auto& v : topology::validate_containment(run.document)) {
    if (!v.pass) return false;
  }
  return topology::overlapping_rooms(run.document).empty();
}

}  // namespace

SynthesizedProgram synthesize_code(const CodeGrammar& g, std::uint64_t seed) {
  for (int attempt = 0; attempt < g.max_attempts; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    Builder b(g, rng);
    if (!b.run()) continue;
    auto compiled = dsl::compile(b.source());
    if (!compiled.ok() || !acceptable(compiled.parsed.program)) continue;
    return {b.source(), std::move(compiled.parsed.program), attempt + 1};
  }
  throw GenerationExhausted("no valid program after " + std::to_string(g.max_attempts) + " attempts (seed " +
                            std::to_string(seed) + ")");
}

}  // namespace mbl::synth
