// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mbl/dsl/ast.hpp"
#include "mbl/dsl/check.hpp"

namespace mbl::dsl {

struct RepairPolicy {
  /// Values for absent optional parameters; parameters not listed here use
  /// the signature default.
  std::map<std::string, ArgValue, std::less<>> defaults{
      {"offset", Number{0}},   {"alignment", Text{"none"}}, {"offset_direction", Text{"none"}},
      {"open", Boolean{false}}, {"set", Text{"in"}},
  };
  /// Append every absent optional argument once the program is clean.
  bool fill_optional = true;
  /// Upper bound on accepted fixes; 0 picks a bound from the program size.
  std::size_t max_steps = 0;
  CheckOptions check;
};

struct RepairResult {
  Program program;
  std::vector<std::string> log;
  /// static_check error counts: the input, then after each accepted fix.
  std::vector<std::size_t> error_trajectory;
  bool unrepairable = false;
  std::string reason;
};

/// Greedy repair: the earliest erroneous statement gets the candidate fix
/// that lowers the total error count most; a fix is only taken when the
/// count strictly drops. Ends compile-clean or flags the program as
/// unrepairable (a required value that cannot be inferred is missing).
RepairResult repair_program(Program program, const RepairPolicy& policy = {});

/// Parses first; statements lost to syntax errors are noted in the log.
RepairResult repair_source(std::string_view source, const RepairPolicy& policy = {});

}  // namespace mbl::dsl
