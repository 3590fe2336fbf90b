// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Hand-worked metric cases shared by the unit and acceptance tests.

#include <string>
#include <vector>

namespace mbl::testdata {

/// Four statements: two modules, a unit over both, a room in the first.
const std::string& f1_gold();

struct F1Case {
  std::string name;
  std::string pred;
  double instance_f1 = 0.0;  // counted by hand against f1_gold()
};

std::vector<F1Case> f1_cases();

std::string replace_all(std::string s, const std::string& from, const std::string& to);

}  // namespace mbl::testdata
