// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/dsl/ast.hpp"

#include <array>
#include <sstream>

namespace mbl::dsl {

namespace {

constexpr std::array<std::string_view, kOpKindCount> kOpNames{
    "module-absolute", "module-relative",  "split",          "merge",
    "unit-from-modules", "unit-directional", "room-container", "room-directional",
    "room-corner",     "room-relative",    "room-at-point",  "door-for-room",
    "door-for-module", "door-midpoint",    "hole",
};

}  // namespace

std::string_view to_string(OpKind op) { return kOpNames[static_cast<std::size_t>(op)]; }

std::optional<OpKind> op_kind_from_string(std::string_view s) {
  for (std::size_t k = 0; k < kOpNames.size(); ++k) {
    if (kOpNames[k] == s) return static_cast<OpKind>(k);
  }
  return std::nullopt;
}

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Module: return "Module";
    case EntityKind::ModuleList: return "List<Module>";
    case EntityKind::Unit: return "Unit";
    case EntityKind::Room: return "Room";
    case EntityKind::Door: return "Door";
    case EntityKind::Hole: return "Hole";
  }
  return "?";
}

std::string_view to_string(DiagCategory c) {
  switch (c) {
    case DiagCategory::Syntax: return "syntax";
    case DiagCategory::UnknownOp: return "unknown-op";
    case DiagCategory::Arity: return "arity";
    case DiagCategory::Type: return "type";
    case DiagCategory::EnumValue: return "enum-value";
    case DiagCategory::UndefinedName: return "undefined-name";
    case DiagCategory::Redefinition: return "redefinition";
    case DiagCategory::WrongArgOrder: return "wrong-arg-order";
  }
  return "?";
}

std::string_view to_string(Severity s) { return s == Severity::Error ? "error" : "warning"; }

std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream os;
  os << d.span.line << ':' << d.span.column << ": " << to_string(d.severity) << " ["
     << to_string(d.category) << "] " << d.message;
  return os.str();
}

std::size_t error_count(const std::vector<Diagnostic>& diags) {
  std::size_t n = 0;
  for (const auto& d : diags) n += d.severity == Severity::Error ? 1 : 0;
  return n;
}

std::vector<std::string> declared_names(const ActionStatement& s) {
  std::vector<std::string> names;
  if (s.result) names.push_back(s.result->name);
  for (const auto& p : s.pieces) names.push_back(p.binding.name);
  return names;
}

std::optional<EntityKind> result_kind(OpKind op) {
  switch (op) {
    case OpKind::ModuleAbsolute:
    case OpKind::ModuleRelative:
    case OpKind::Merge: return EntityKind::Module;
    case OpKind::Split: return EntityKind::ModuleList;
    case OpKind::UnitFromModules:
    case OpKind::UnitDirectional: return EntityKind::Unit;
    case OpKind::RoomContainer:
    case OpKind::RoomDirectional:
    case OpKind::RoomCorner:
    case OpKind::RoomRelative:
    case OpKind::RoomAtPoint: return EntityKind::Room;
    case OpKind::DoorForRoom:
    case OpKind::DoorForModule:
    case OpKind::DoorMidpoint: return EntityKind::Door;
    case OpKind::Hole: return EntityKind::Hole;
  }
  return std::nullopt;
}

void rebuild_symbols(Program& p) {
  p.symbols.clear();
  for (std::size_t k = 0; k < p.statements.size(); ++k) {
    for (const auto& name : declared_names(p.statements[k])) p.symbols.emplace(name, k);
  }
}

}  // namespace mbl::dsl
