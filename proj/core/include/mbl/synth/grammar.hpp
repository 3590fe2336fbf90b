// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbl/dsl/ast.hpp"

namespace mbl::synth {

class GenerationExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Production parameters for synthetic layout programs. Weights are indexed
/// by count (entry k is the weight of drawing k).
struct CodeGrammar {
  std::vector<double> module_count_weights{0.0, 0.12, 0.22, 0.3, 0.24, 0.12};
  std::vector<double> unit_count_weights{0.0, 0.45, 0.4, 0.15};
  std::vector<double> element_count_weights{0.0, 0.1, 0.2, 0.25, 0.2, 0.15, 0.1};
  double split_probability = 0.2;
  double merge_probability = 0.15;
  double directional_unit_probability = 0.1;
  double module_min = 1500.0;
  double module_max = 8000.0;
  double room_min = 1000.0;
  double room_max = 7000.0;
  double step = 10.0;
  std::vector<std::string> room_types{"Living Room", "Bedroom", "Bathroom", "Kitchen"};
  int max_attempts = 64;
  int statement_tries = 12;
};

struct SynthesizedProgram {
  std::string source;  // canonical named style
  dsl::Program program;
  int attempts = 1;
};

/// Draws a program that compiles, executes, keeps every room inside its unit
/// and every room clear of the others.
SynthesizedProgram synthesize_code(const CodeGrammar& g, std::uint64_t seed);

}  // namespace mbl::synth
