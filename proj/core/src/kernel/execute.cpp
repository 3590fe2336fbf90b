// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/kernel/execute.hpp"

#include <algorithm>

#include "mbl/dsl/signatures.hpp"
#include "mbl/geom/types.hpp"

namespace mbl::kernel {

using dsl::ArgValue;
using dsl::EntityKind;

std::string format_exec_error(const ExecError& e) {
  return "statement " + std::to_string(e.statement + 1) + ": [" + std::string(to_string(e.category)) + "] " +
         e.message;
}

Executor::Executor(Config config) { doc_.config = std::move(config); }

namespace {

[[noreturn]] void fail(ExecCategory c, const std::string& m) { throw ExecFailure(c, m); }

// Argument access with signature fallbacks.
class Args {
 public:
  Args(const dsl::ActionStatement& s, const std::map<std::string, Executor::Binding>& env) : env_(env) {
    for (const auto& b : dsl::bind_arguments(s)) {
      if (b.param) values_.emplace(b.name, b.arg->value);
    }
    sig_ = &dsl::signature(s.signature);
  }

  const ArgValue* find(std::string_view name) const {
    const auto it = values_.find(std::string(name));
    if (it != values_.end()) return &it->second;
    const auto* p = sig_->find(name);
    if (p && p->fallback) return &*p->fallback;
    return nullptr;
  }

  bool has(std::string_view name) const { return values_.count(std::string(name)) > 0; }

  template <class T>
  const T& get(std::string_view name) const {
    const ArgValue* v = find(name);
    const T* t = v ? std::get_if<T>(v) : nullptr;
    if (!t) fail(ExecCategory::NotCompiled, "argument '" + std::string(name) + "' is missing or mistyped");
    return *t;
  }

  double number(std::string_view name) const { return get<dsl::Number>(name).value; }
  const std::string& text(std::string_view name) const { return get<dsl::Text>(name).value; }
  bool boolean(std::string_view name) const { return get<dsl::Boolean>(name).value; }

  Side side(std::string_view name) const {
    const auto s = side_from_string(text(name));
    if (!s) fail(ExecCategory::NotCompiled, "'" + text(name) + "' is not a direction");
    return *s;
  }

  std::optional<Side> maybe_side(std::string_view name) const {
    if (!find(name)) return std::nullopt;
    return side_from_string(text(name));
  }

  int entity(const std::string& ref, EntityKind kind) const {
    const auto it = env_.find(ref);
    if (it == env_.end() || it->second.ids.empty()) fail(ExecCategory::UndefinedEntity, "'" + ref + "' is not defined");
    if (it->second.kind != kind) {
      fail(ExecCategory::NotCompiled, "'" + ref + "' is a " + std::string(dsl::to_string(it->second.kind)));
    }
    return it->second.ids.front();
  }

  int ref(std::string_view name, EntityKind kind) const { return entity(get<dsl::Ref>(name).name, kind); }

  std::vector<int> modules(std::string_view name) const {
    std::vector<int> ids;
    for (const auto& n : get<dsl::RefList>(name).names) ids.push_back(entity(n, EntityKind::Module));
    return ids;
  }

  RoomHost host() const {
    RoomHost h;
    h.unit = ref("unit", EntityKind::Unit);
    if (has("module")) h.module = ref("module", EntityKind::Module);
    return h;
  }

  OpeningSpec opening() const {
    OpeningSpec o;
    o.direction = side("direction");
    if (find("alignment")) o.alignment = maybe_side("alignment");
    if (find("offset")) o.offset = number("offset");
    if (find("set")) o.set_mode = text("set");
    if (find("set_dimension")) o.set_dimension = number("set_dimension");
    o.dimension = number("dimension");
    return o;
  }

 private:
  const std::map<std::string, Executor::Binding>& env_;
  std::map<std::string, ArgValue> values_;
  const dsl::Signature* sig_ = nullptr;
};

std::string entity_name(EntityKind k) {
  switch (k) {
    case EntityKind::Module:
    case EntityKind::ModuleList: return "module";
    case EntityKind::Unit: return "unit";
    case EntityKind::Room: return "room";
    case EntityKind::Door: return "door";
    case EntityKind::Hole: return "hole";
  }
  return "?";
}

}  // namespace

std::optional<ExecError> Executor::apply(const dsl::ActionStatement& s, std::size_t index) {
  LayoutDocument saved_doc = doc_;
  auto saved_env = env_;
  try {
    run(s, index);
    return std::nullopt;
  } catch (const ExecFailure& f) {
    doc_ = std::move(saved_doc);
    env_ = std::move(saved_env);
    return ExecError{index, f.category(), f.what()};
  } catch (const geom::GeometryError& g) {
    doc_ = std::move(saved_doc);
    env_ = std::move(saved_env);
    ExecCategory c = ExecCategory::DegenerateDimension;
    if (g.kind() == geom::GeometryErrorKind::HasHole) c = ExecCategory::HasHole;
    if (g.kind() == geom::GeometryErrorKind::Disconnected) c = ExecCategory::Disconnected;
    return ExecError{index, c, g.what()};
  }
}

void Executor::run(const dsl::ActionStatement& s, std::size_t index) {
  if (s.signature < 0 || !s.op) fail(ExecCategory::NotCompiled, "'" + s.callee + "' is not a known action");
  const Args a(s, env_);
  const auto op = *s.op;
  std::vector<int> ids;
  switch (op) {
    case dsl::OpKind::ModuleAbsolute:
      ids.push_back(create_module_absolute(doc_, a.text("name"), a.get<dsl::PointValue>("point").resolve(),
                                           a.number("length"), a.number("width")));
      break;
    case dsl::OpKind::ModuleRelative:
      ids.push_back(create_module_relative(doc_, a.text("name"), a.ref("module", EntityKind::Module),
                                           a.side("direction"), a.number("length"), a.number("width"),
                                           a.maybe_side("alignment"), a.maybe_side("offset_direction"),
                                           a.number("offset")));
      break;
    case dsl::OpKind::Split: {
      const auto& dir = a.text("direction");
      if (dir != "west-east" && dir != "north-south") fail(ExecCategory::NotCompiled, "bad split direction");
      const auto [p, q] = split_module(doc_, a.ref("module", EntityKind::Module),
                                       dir == "west-east" ? SplitAxis::WestEast : SplitAxis::NorthSouth,
                                       a.number("ratio"));
      ids = {p, q};
      break;
    }
    case dsl::OpKind::Merge: {
      const auto members = a.modules("modules");
      const int merged = merge_modules(doc_, members);
      for (auto& [name, b] : env_) {
        if (b.kind == EntityKind::Module && std::find(members.begin(), members.end(), b.ids.front()) != members.end()) {
          b.ids = {merged};
        }
      }
      ids.push_back(merged);
      break;
    }
    case dsl::OpKind::UnitFromModules:
      ids.push_back(create_unit_from_modules(doc_, a.text("name"), a.modules("modules")));
      break;
    case dsl::OpKind::UnitDirectional:
      ids.push_back(create_unit_directional(doc_, a.text("name"), a.modules("modules"), a.side("direction"),
                                            a.get<dsl::NumberList>("dimensions").values));
      break;
    case dsl::OpKind::RoomContainer:
      ids.push_back(create_room_in_container(doc_, a.text("name"), a.host(), a.boolean("regular")));
      break;
    case dsl::OpKind::RoomDirectional:
      ids.push_back(create_room_directional(doc_, a.text("name"), a.host(), a.side("direction"),
                                            a.number("dimension"), a.boolean("open")));
      break;
    case dsl::OpKind::RoomCorner: {
      const auto c = corner_from_string(a.text("corner"));
      if (!c) fail(ExecCategory::NotCompiled, "'" + a.text("corner") + "' is not a corner");
      ids.push_back(create_room_corner(doc_, a.text("name"), a.host(), *c, a.number("length"), a.number("width"),
                                       a.maybe_side("offset_direction"), a.number("offset"), a.boolean("open")));
      break;
    }
    case dsl::OpKind::RoomRelative:
      ids.push_back(create_room_relative(doc_, a.text("name"), a.ref("unit", EntityKind::Unit),
                                         a.ref("room", EntityKind::Room), a.side("direction"), a.number("length"),
                                         a.number("width"), a.maybe_side("alignment"),
                                         a.maybe_side("offset_direction"), a.number("offset"), a.boolean("open")));
      break;
    case dsl::OpKind::RoomAtPoint:
      ids.push_back(create_room_at_point(doc_, a.text("name"), a.ref("unit", EntityKind::Unit),
                                         a.get<dsl::PointValue>("center").resolve(), a.number("length"),
                                         a.number("width")));
      break;
    case dsl::OpKind::DoorForRoom:
      ids.push_back(create_door_for_room(doc_, a.ref("room", EntityKind::Room), a.opening()));
      break;
    case dsl::OpKind::DoorForModule:
      ids.push_back(create_door_for_module(doc_, a.ref("module", EntityKind::Module), a.opening()));
      break;
    case dsl::OpKind::DoorMidpoint:
      if (dsl::signature(s.signature).find("room")) {
        ids.push_back(create_door_for_room(doc_, a.ref("room", EntityKind::Room), a.opening()));
      } else {
        ids.push_back(create_door_for_module(doc_, a.ref("module", EntityKind::Module), a.opening()));
      }
      break;
    case dsl::OpKind::Hole:
      ids.push_back(create_hole(doc_, a.ref("module", EntityKind::Module), a.opening()));
      break;
  }

  const auto kind = *dsl::result_kind(op);
  for (int id : ids) {
    doc_.log.push_back({index, std::string(dsl::to_string(op)), entity_name(kind), id});
  }
  if (s.result) env_[s.result->name] = Binding{kind, ids};
  for (const auto& piece : s.pieces) {
    if (piece.index >= 0 && static_cast<std::size_t>(piece.index) < ids.size()) {
      env_[piece.binding.name] = Binding{EntityKind::Module, {ids[static_cast<std::size_t>(piece.index)]}};
    }
  }
}

ExecResult execute(const dsl::Program& program, const Config& config) {
  Executor ex(config);
  for (std::size_t k = 0; k < program.statements.size(); ++k) {
    if (auto err = ex.apply(program.statements[k], k)) return ExecResult{ex.take(), std::move(err)};
  }
  return ExecResult{ex.take(), std::nullopt};
}

}  // namespace mbl::kernel
