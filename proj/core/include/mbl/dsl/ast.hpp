// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mbl/geom/types.hpp"

namespace mbl::dsl {

struct SourceSpan {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
  friend auto operator<=>(const SourceSpan&, const SourceSpan&) = default;
};

/// The action kinds of the layout language.
enum class OpKind {
  ModuleAbsolute,
  ModuleRelative,
  Split,
  Merge,
  UnitFromModules,
  UnitDirectional,
  RoomContainer,
  RoomDirectional,
  RoomCorner,
  RoomRelative,
  RoomAtPoint,
  DoorForRoom,
  DoorForModule,
  DoorMidpoint,
  Hole,
};

inline constexpr std::size_t kOpKindCount = 15;

std::string_view to_string(OpKind op);
std::optional<OpKind> op_kind_from_string(std::string_view s);

/// What a bound name refers to.
enum class EntityKind { Module, ModuleList, Unit, Room, Door, Hole };

std::string_view to_string(EntityKind kind);

// Argument values. Numbers are millimetres unless the parameter says otherwise.
struct Number {
  double value = 0.0;
  friend bool operator==(const Number&, const Number&) = default;
};
struct Text {
  std::string value;
  friend bool operator==(const Text&, const Text&) = default;
};
struct Boolean {
  bool value = false;
  friend bool operator==(const Boolean&, const Boolean&) = default;
};
/// `initial_point` (the document origin) or an explicit `new Point(x, y)`.
struct PointValue {
  std::optional<geom::Point> explicit_point;
  geom::Point resolve() const { return explicit_point.value_or(geom::Point{}); }
  friend bool operator==(const PointValue&, const PointValue&) = default;
};
struct Ref {
  std::string name;
  friend bool operator==(const Ref&, const Ref&) = default;
};
struct RefList {
  std::string element_type = "Module";
  std::vector<std::string> names;
  friend bool operator==(const RefList&, const RefList&) = default;
};
struct NumberList {
  std::string element_type = "double";
  std::vector<double> values;
  friend bool operator==(const NumberList&, const NumberList&) = default;
};

using ArgValue = std::variant<Number, Text, Boolean, PointValue, Ref, RefList, NumberList>;

struct Argument {
  std::optional<std::string> name;
  ArgValue value;
  SourceSpan span;
};

enum class ArgStyle { Named, Positional };

struct Binding {
  std::string declared_type;
  std::string name;
  SourceSpan span;
};

/// `Module a = list[0];` following a split.
struct PieceBinding {
  int index = 0;
  Binding binding;
};

struct ActionStatement {
  std::string callee;  // "Module", "Unit", "Room" or "Utils.<Function>"
  bool constructor = false;
  std::optional<OpKind> op;  // empty when the callee is unknown
  int signature = -1;        // index into the signature table, -1 if unresolved
  std::optional<Binding> result;
  std::vector<PieceBinding> pieces;
  std::vector<Argument> args;
  ArgStyle style = ArgStyle::Named;
  /// Positional calls only: the optional host parameter was left out.
  bool host_omitted = false;
  SourceSpan span;
};

struct Program {
  std::vector<ActionStatement> statements;
  /// name -> index of the declaring statement (first declaration wins)
  std::map<std::string, std::size_t> symbols;
};

enum class Severity { Error, Warning };

enum class DiagCategory {
  Syntax,
  UnknownOp,
  Arity,
  Type,
  EnumValue,
  UndefinedName,
  Redefinition,
  WrongArgOrder,
};

std::string_view to_string(DiagCategory c);
std::string_view to_string(Severity s);

inline constexpr std::size_t kNoStatement = std::numeric_limits<std::size_t>::max();

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagCategory category = DiagCategory::Syntax;
  std::string message;
  SourceSpan span;
  std::size_t statement = kNoStatement;
};

std::string format_diagnostic(const Diagnostic& d);
std::size_t error_count(const std::vector<Diagnostic>& diags);

/// Names every statement declares: the result binding, split pieces.
std::vector<std::string> declared_names(const ActionStatement& s);

/// Entity kind a statement's result binding denotes.
std::optional<EntityKind> result_kind(OpKind op);

/// Recomputes Program::symbols from the statements.
void rebuild_symbols(Program& p);

}  // namespace mbl::dsl
