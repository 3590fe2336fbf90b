// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mbl/dsl/ast.hpp"

namespace mbl::dsl {

enum class TokenKind { Identifier, Keyword, Number, Text, Punctuation, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string lexeme;  // text literals hold the unescaped contents
  SourceSpan span;
  bool line_break_before = false;
  double number = 0.0;
};

/// Splits source into tokens. A literal backslash-n outside string literals
/// is a line break (dataset files escape newlines). Comments and operator
/// characters are reported as syntax errors and skipped.
std::vector<Token> tokenize(std::string_view source, std::vector<Diagnostic>& diags);

}  // namespace mbl::dsl
