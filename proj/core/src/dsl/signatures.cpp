// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/dsl/signatures.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

namespace mbl::dsl {

namespace {

constexpr std::array<std::string_view, 4> kDirections{"north", "south", "east", "west"};
constexpr std::array<std::string_view, 4> kCorners{"northeast", "northwest", "southeast", "southwest"};
constexpr std::array<std::string_view, 2> kSplitDirections{"west-east", "north-south"};
constexpr std::array<std::string_view, 3> kSetModes{"in", "out", "none"};
constexpr std::array<std::string_view, 4> kRoomTypes{"living room", "bedroom", "bathroom", "kitchen"};

Param req(std::string_view name, ParamType t) { return Param{name, t, true, std::nullopt, false}; }

Param opt(std::string_view name, ParamType t, ArgValue fallback) {
  return Param{name, t, false, std::move(fallback), false};
}

Param host(std::string_view name, ParamType t) { return Param{name, t, false, std::nullopt, true}; }

const Text kNone{"none"};

std::vector<Signature> build_table() {
  using P = ParamType;
  std::vector<Signature> t;
  t.push_back({OpKind::ModuleAbsolute, "Module", true, "Module",
               {req("name", P::Label), req("point", P::Point), req("length", P::Length),
                req("width", P::Length)}});
  t.push_back({OpKind::ModuleRelative, "Module", true, "Module",
               {req("name", P::Label), req("module", P::ModuleRef), req("direction", P::Direction),
                req("length", P::Length), req("width", P::Length),
                opt("alignment", P::Alignment, kNone), opt("offset_direction", P::Alignment, kNone),
                opt("offset", P::Offset, Number{0})}});
  t.push_back({OpKind::Split, "Utils.SplitModule", false, "List<Module>",
               {req("module", P::ModuleRef), req("direction", P::SplitDirection),
                req("ratio", P::Ratio)}});
  t.push_back({OpKind::Merge, "Utils.MergeModules", false, "Module", {req("modules", P::ModuleList)}});
  t.push_back({OpKind::UnitFromModules, "Unit", true, "Unit",
               {req("name", P::Label), req("modules", P::ModuleList)}});
  t.push_back({OpKind::UnitDirectional, "Unit", true, "Unit",
               {req("name", P::Label), req("modules", P::ModuleList), req("direction", P::Direction),
                req("dimensions", P::LengthList)}});
  t.push_back({OpKind::RoomContainer, "Room", true, "Room",
               {req("name", P::Label), host("module", P::ModuleRef), req("unit", P::UnitRef),
                req("regular", P::Boolean)}});
  t.push_back({OpKind::RoomDirectional, "Room", true, "Room",
               {req("name", P::Label), host("module", P::ModuleRef), req("unit", P::UnitRef),
                req("direction", P::Direction), req("dimension", P::Length),
                opt("open", P::Boolean, Boolean{false})}});
  t.push_back({OpKind::RoomCorner, "Room", true, "Room",
               {req("name", P::Label), host("module", P::ModuleRef), req("unit", P::UnitRef),
                req("corner", P::Corner), req("length", P::Length), req("width", P::Length),
                opt("offset_direction", P::Alignment, kNone), opt("offset", P::Offset, Number{0}),
                opt("open", P::Boolean, Boolean{false})}});
  t.push_back({OpKind::RoomRelative, "Room", true, "Room",
               {req("name", P::Label), req("unit", P::UnitRef), req("room", P::RoomRef),
                req("direction", P::Direction), req("length", P::Length), req("width", P::Length),
                opt("alignment", P::Alignment, kNone), opt("offset_direction", P::Alignment, kNone),
                opt("offset", P::Offset, Number{0}), opt("open", P::Boolean, Boolean{false})}});
  t.push_back({OpKind::RoomAtPoint, "Room", true, "Room",
               {req("name", P::Label), req("unit", P::UnitRef), req("center", P::Point),
                req("length", P::Length), req("width", P::Length)}});
  auto door_tail = [&](std::vector<Param> head, bool aligned) {
    if (aligned) {
      head.push_back(opt("alignment", P::Alignment, kNone));
      head.push_back(opt("offset", P::Offset, Number{0}));
    }
    head.push_back(opt("set", P::SetMode, Text{"in"}));
    head.push_back(opt("set_dimension", P::Offset, Number{0}));
    head.push_back(opt("dimension", P::Length, Number{900}));
    return head;
  };
  t.push_back({OpKind::DoorForRoom, "Utils.CreateDoorForRoom", false, "Door",
               door_tail({req("room", P::RoomRef), req("direction", P::Direction)}, true)});
  t.push_back({OpKind::DoorForModule, "Utils.CreateDoorForModule", false, "Door",
               door_tail({req("module", P::ModuleRef), req("direction", P::Direction)}, true)});
  t.push_back({OpKind::DoorMidpoint, "Utils.CreateDoorOnMidpointForRoom", false, "Door",
               door_tail({req("room", P::RoomRef), req("direction", P::Direction)}, false)});
  t.push_back({OpKind::DoorMidpoint, "Utils.CreateDoorOnMidpointForModule", false, "Door",
               door_tail({req("module", P::ModuleRef), req("direction", P::Direction)}, false)});
  t.push_back({OpKind::Hole, "Utils.CreateHole", false, "Hole",
               {req("module", P::ModuleRef), req("direction", P::Direction),
                opt("alignment", P::Alignment, kNone), opt("offset", P::Offset, Number{0}),
                req("dimension", P::Length)}});
  return t;
}

bool contains(std::span<const std::string_view> set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

}  // namespace

std::string_view to_string(ParamType t) {
  switch (t) {
    case ParamType::Label: return "label";
    case ParamType::Direction: return "direction";
    case ParamType::Corner: return "corner";
    case ParamType::Alignment: return "alignment";
    case ParamType::SplitDirection: return "split direction";
    case ParamType::SetMode: return "set mode";
    case ParamType::Length: return "length";
    case ParamType::Offset: return "offset";
    case ParamType::Ratio: return "ratio";
    case ParamType::Boolean: return "boolean";
    case ParamType::Point: return "point";
    case ParamType::ModuleRef: return "Module";
    case ParamType::UnitRef: return "Unit";
    case ParamType::RoomRef: return "Room";
    case ParamType::ModuleList: return "List<Module>";
    case ParamType::LengthList: return "List<double>";
  }
  return "?";
}

const Param* Signature::find(std::string_view name) const {
  for (const auto& p : params) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::size_t Signature::required_count() const {
  return static_cast<std::size_t>(
      std::count_if(params.begin(), params.end(), [](const Param& p) { return p.required; }));
}

const std::vector<Signature>& signature_table() {
  static const std::vector<Signature> table = build_table();
  return table;
}

const Signature& signature(int index) { return signature_table().at(static_cast<std::size_t>(index)); }

std::vector<int> signatures_for_callee(std::string_view callee, bool constructor) {
  std::vector<int> out;
  const auto& t = signature_table();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k].callee == callee && t[k].constructor == constructor) out.push_back(static_cast<int>(k));
  }
  return out;
}

bool known_callee(std::string_view callee, bool constructor) {
  return !signatures_for_callee(callee, constructor).empty();
}

int primary_signature(OpKind op) {
  const auto& t = signature_table();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k].op == op) return static_cast<int>(k);
  }
  return -1;
}

std::span<const std::string_view> directions() { return kDirections; }
std::span<const std::string_view> corners() { return kCorners; }
std::span<const std::string_view> split_directions() { return kSplitDirections; }
std::span<const std::string_view> set_modes() { return kSetModes; }
std::span<const std::string_view> default_room_types() { return kRoomTypes; }

bool is_direction(std::string_view s) { return contains(kDirections, s); }
bool is_alignment(std::string_view s) { return s == "none" || is_direction(s); }
bool is_corner(std::string_view s) { return contains(kCorners, s); }
bool is_split_direction(std::string_view s) { return contains(kSplitDirections, s); }
bool is_set_mode(std::string_view s) { return contains(kSetModes, s); }

bool perpendicular(std::string_view a, std::string_view b) {
  const bool a_ns = a == "north" || a == "south";
  const bool b_ns = b == "north" || b == "south";
  return is_direction(a) && is_direction(b) && a_ns != b_ns;
}

std::string_view opposite(std::string_view d) {
  if (d == "north") return "south";
  if (d == "south") return "north";
  if (d == "east") return "west";
  if (d == "west") return "east";
  return "none";
}

std::string semantic_label(std::string_view room_name) {
  std::string s(room_name);
  while (!s.empty() && (std::isdigit(static_cast<unsigned char>(s.back())) ||
                        std::isspace(static_cast<unsigned char>(s.back())) || s.back() == '_')) {
    s.pop_back();
  }
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  s = s.substr(b);
  for (auto& ch : s) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (ch == '_') ch = ' ';
  }
  return s;
}

std::optional<EntityKind> expected_ref_kind(ParamType t) {
  switch (t) {
    case ParamType::ModuleRef:
    case ParamType::ModuleList: return EntityKind::Module;
    case ParamType::UnitRef: return EntityKind::Unit;
    case ParamType::RoomRef: return EntityKind::Room;
    default: return std::nullopt;
  }
}

std::optional<std::vector<const Param*>> positional_layout(const Signature& sig, std::size_t count,
                                                           bool omit_host) {
  std::vector<const Param*> slots;
  for (const auto& p : sig.params) {
    if (p.omittable_host && omit_host) continue;
    slots.push_back(&p);
  }
  const bool has_host = std::any_of(sig.params.begin(), sig.params.end(),
                                    [](const Param& p) { return p.omittable_host; });
  if (omit_host && !has_host) return std::nullopt;
  if (count > slots.size()) return std::nullopt;
  for (std::size_t k = count; k < slots.size(); ++k) {
    if (slots[k]->required || slots[k]->omittable_host) return std::nullopt;
  }
  slots.resize(count);
  return slots;
}

std::vector<BoundArg> bind_arguments(const ActionStatement& s) {
  std::vector<BoundArg> out;
  if (s.signature < 0) {
    for (const auto& a : s.args) out.push_back({a.name.value_or(""), nullptr, &a});
    return out;
  }
  const Signature& sig = signature(s.signature);
  if (s.style == ArgStyle::Named) {
    for (const auto& a : s.args) {
      const Param* p = a.name ? sig.find(*a.name) : nullptr;
      out.push_back({a.name.value_or(""), p, &a});
    }
    return out;
  }
  std::vector<const Param*> slots;
  for (const auto& p : sig.params) {
    if (p.omittable_host && s.host_omitted) continue;
    slots.push_back(&p);
  }
  for (std::size_t k = 0; k < s.args.size(); ++k) {
    if (k < slots.size()) {
      out.push_back({std::string(slots[k]->name), slots[k], &s.args[k]});
    } else {
      out.push_back({"", nullptr, &s.args[k]});
    }
  }
  return out;
}

}  // namespace mbl::dsl

namespace mbl::dsl {

Fit fit(const Param& p, const ArgValue& v, const KindLookup& kind_of) {
  auto ref_ok = [&](const std::string& name, EntityKind want) {
    const auto k = kind_of ? kind_of(name) : std::nullopt;
    return !k || *k == want;
  };
  switch (p.type) {
    case ParamType::Label:
      return std::holds_alternative<Text>(v) ? Fit::Exact : Fit::Mismatch;
    case ParamType::Direction:
    case ParamType::Corner:
    case ParamType::Alignment:
    case ParamType::SplitDirection:
    case ParamType::SetMode: {
      const auto* t = std::get_if<Text>(&v);
      if (!t) return Fit::Mismatch;
      bool member = false;
      if (p.type == ParamType::Direction) member = is_direction(t->value);
      if (p.type == ParamType::Corner) member = is_corner(t->value);
      if (p.type == ParamType::Alignment) member = is_alignment(t->value);
      if (p.type == ParamType::SplitDirection) member = is_split_direction(t->value);
      if (p.type == ParamType::SetMode) member = is_set_mode(t->value);
      return member ? Fit::Exact : Fit::Shape;
    }
    case ParamType::Length:
    case ParamType::Offset:
    case ParamType::Ratio: {
      const auto* n = std::get_if<Number>(&v);
      if (!n) return Fit::Mismatch;
      const double x = n->value;
      bool ok = std::isfinite(x);
      if (p.type == ParamType::Length) ok = ok && x > 0.0;
      if (p.type == ParamType::Offset) ok = ok && x >= 0.0;
      if (p.type == ParamType::Ratio) ok = ok && x > 0.0 && x < 1.0;
      return ok ? Fit::Exact : Fit::Shape;
    }
    case ParamType::Boolean:
      return std::holds_alternative<Boolean>(v) ? Fit::Exact : Fit::Mismatch;
    case ParamType::Point:
      return std::holds_alternative<PointValue>(v) ? Fit::Exact : Fit::Mismatch;
    case ParamType::ModuleRef:
    case ParamType::UnitRef:
    case ParamType::RoomRef: {
      const auto* r = std::get_if<Ref>(&v);
      if (!r) return Fit::Mismatch;
      return ref_ok(r->name, *expected_ref_kind(p.type)) ? Fit::Exact : Fit::Shape;
    }
    case ParamType::ModuleList: {
      const auto* l = std::get_if<RefList>(&v);
      if (!l) return Fit::Mismatch;
      for (const auto& n : l->names) {
        if (!ref_ok(n, EntityKind::Module)) return Fit::Shape;
      }
      return l->names.empty() ? Fit::Shape : Fit::Exact;
    }
    case ParamType::LengthList: {
      const auto* l = std::get_if<NumberList>(&v);
      if (!l) return Fit::Mismatch;
      for (double x : l->values) {
        if (!(std::isfinite(x) && x > 0.0)) return Fit::Shape;
      }
      return l->values.empty() ? Fit::Shape : Fit::Exact;
    }
  }
  return Fit::Mismatch;
}

}  // namespace mbl::dsl
