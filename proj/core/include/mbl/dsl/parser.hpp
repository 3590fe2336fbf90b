// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mbl/dsl/ast.hpp"
#include "mbl/dsl/signatures.hpp"

namespace mbl::dsl {

struct ParseResult {
  Program program;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return error_count(diagnostics) == 0; }
};

/// Parses layout code. Statements with syntax errors are reported and
/// skipped; the rest are kept in order. Never throws on malformed input.
/// When `style_hint` is given, statements written in the other style draw
/// a warning.
ParseResult parse_program(std::string_view source, std::optional<ArgStyle> style_hint = std::nullopt);

/// Picks the signature (and host omission) for a resolved callee. Exposed so
/// repair can re-resolve statements it edits.
void resolve_signature(ActionStatement& s, const KindLookup& kind_of);

}  // namespace mbl::dsl
