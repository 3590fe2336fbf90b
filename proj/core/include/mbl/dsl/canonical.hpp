// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mbl/dsl/ast.hpp"
#include "mbl/dsl/signatures.hpp"

namespace mbl::dsl {

/// Shortest text that reads back to the same double; integral values carry
/// no decimal point.
std::string format_number(double v);

std::string format_value(const ArgValue& v);

/// Bound (parameter, value) pairs of a resolved statement in signature
/// order. An optional parameter that is absent but followed by a present one
/// is filled with its default, so the named and positional spellings of the
/// same call normalize identically. Unmatched arguments come last.
std::vector<std::pair<std::string, ArgValue>> normalized_arguments(const ActionStatement& s);

/// One statement in canonical named style (split index bindings follow on
/// their own lines).
std::string canonical_statement(const ActionStatement& s);

/// Named-argument text, one statement per line.
std::string canonicalize(const Program& p);

/// The same program with arguments identified by position only.
std::string to_positional(const Program& p);

bool structurally_equal(const ActionStatement& a, const ActionStatement& b);
bool structurally_equal(const Program& a, const Program& b);

}  // namespace mbl::dsl
