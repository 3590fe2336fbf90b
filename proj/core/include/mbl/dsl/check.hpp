// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbl/dsl/ast.hpp"
#include "mbl/dsl/parser.hpp"

namespace mbl::dsl {

struct CheckOptions {
  /// Semantic room labels accepted as room names ("Bedroom 2" -> "bedroom").
  std::vector<std::string> room_types{"living room", "bedroom", "bathroom", "kitchen"};
};

/// Compile check over a parsed program. Empty result means every op is
/// known, arities and value kinds fit, enums are legal and every name is
/// declared before use exactly once.
std::vector<Diagnostic> static_check(const Program& p, const CheckOptions& opts = {});

/// Permutation of a statement's bound values that makes every value fit its
/// parameter exactly, when the statement does not fit as written. Entry k
/// is the index (into bind order) of the value that belongs in slot k.
std::optional<std::vector<std::size_t>> argument_permutation(const ActionStatement& s,
                                                             const KindLookup& kind_of);

struct CompileResult {
  ParseResult parsed;
  std::vector<Diagnostic> diagnostics;  // parse errors followed by check errors

  bool ok() const { return error_count(diagnostics) == 0; }
};

CompileResult compile(std::string_view source, const CheckOptions& opts = {});

}  // namespace mbl::dsl
