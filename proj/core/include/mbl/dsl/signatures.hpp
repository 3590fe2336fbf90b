// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mbl/dsl/ast.hpp"

namespace mbl::dsl {

enum class ParamType {
  Label,           // free text ("Module 1", "Kitchen")
  Direction,       // north | south | east | west
  Corner,          // northeast | northwest | southeast | southwest
  Alignment,       // direction or "none"
  SplitDirection,  // west-east | north-south
  SetMode,         // in | out | none
  Length,          // strictly positive millimetres
  Offset,          // non-negative millimetres
  Ratio,           // open interval (0, 1)
  Boolean,
  Point,
  ModuleRef,
  UnitRef,
  RoomRef,
  ModuleList,
  LengthList,
};

std::string_view to_string(ParamType t);

struct Param {
  std::string_view name;
  ParamType type;
  bool required = true;
  /// Value substituted by repair when the argument is missing.
  std::optional<ArgValue> fallback;
  /// Required-less parameter that may be dropped from the middle of a
  /// positional list (room hosts: omitted means "use the unit").
  bool omittable_host = false;
};

struct Signature {
  OpKind op;
  std::string_view callee;
  bool constructor;
  std::string_view result_type;  // declared type used when printing bindings
  std::vector<Param> params;

  const Param* find(std::string_view name) const;
  std::size_t required_count() const;
};

/// The frozen table of every action signature in canonical parameter order.
const std::vector<Signature>& signature_table();
const Signature& signature(int index);

/// Signature indices callable via the given callee text.
std::vector<int> signatures_for_callee(std::string_view callee, bool constructor);
bool known_callee(std::string_view callee, bool constructor);

/// First signature of an op kind (door-midpoint has a room and a module form).
int primary_signature(OpKind op);

// Enumerated vocabularies.
std::span<const std::string_view> directions();
std::span<const std::string_view> corners();
std::span<const std::string_view> split_directions();
std::span<const std::string_view> set_modes();
std::span<const std::string_view> default_room_types();

bool is_direction(std::string_view s);
bool is_alignment(std::string_view s);
bool is_corner(std::string_view s);
bool is_split_direction(std::string_view s);
bool is_set_mode(std::string_view s);
bool perpendicular(std::string_view a, std::string_view b);
std::string_view opposite(std::string_view direction);

/// "Living Room 2" -> "living room".
std::string semantic_label(std::string_view room_name);

/// Kind of entity a reference parameter expects.
std::optional<EntityKind> expected_ref_kind(ParamType t);

/// Arguments matched to parameters. Positional arguments take the names of
/// the parameters they land on; entries beyond the signature keep no name.
struct BoundArg {
  std::string name;  // empty when unmatched
  const Param* param = nullptr;
  const Argument* arg = nullptr;
};

std::vector<BoundArg> bind_arguments(const ActionStatement& s);

using KindLookup = std::function<std::optional<EntityKind>(std::string_view)>;

/// How well a value suits a parameter: Exact satisfies every constraint
/// (enum membership, sign, reference kind when known); Shape has the right
/// value category only.
enum class Fit { Mismatch, Shape, Exact };

Fit fit(const Param& p, const ArgValue& v, const KindLookup& kind_of);

/// Parameter sequence a positional call of `count` arguments fills, when
/// the signature admits that count. Omitting a host parameter is explicit.
std::optional<std::vector<const Param*>> positional_layout(const Signature& sig, std::size_t count,
                                                           bool omit_host);

}  // namespace mbl::dsl
