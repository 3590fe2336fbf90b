// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbl/dsl/ast.hpp"

namespace mbl::synth {

class MissingTemplate : public std::runtime_error {
 public:
  explicit MissingTemplate(const std::string& scenario)
      : std::runtime_error("no description templates for '" + scenario + "'"), scenario_(scenario) {}
  const std::string& scenario() const { return scenario_; }

 private:
  std::string scenario_;
};

/// Five sentence templates per action scenario. Slots are written {param}.
class TemplateBank {
 public:
  static const TemplateBank& standard();

  void add(std::string scenario, std::array<std::string, 5> templates);
  const std::array<std::string, 5>& at(const std::string& scenario) const;
  bool has(const std::string& scenario) const { return bank_.count(scenario) > 0; }
  const std::map<std::string, std::array<std::string, 5>>& entries() const { return bank_; }

 private:
  std::map<std::string, std::array<std::string, 5>> bank_;
};

/// Op kind plus the optional features in use, e.g. "room-corner/module/shifted".
std::string scenario_of(const dsl::ActionStatement& s);

/// Entity labels by declared name, as the executed program would show them.
using LabelMap = std::map<std::string, std::string>;
void record_labels(const dsl::ActionStatement& s, LabelMap& labels);

/// Slot text for every parameter a statement's templates may mention.
std::map<std::string, std::string> slot_values(const dsl::ActionStatement& s, const LabelMap& labels);

std::string fill_template(const std::string& tmpl, const std::map<std::string, std::string>& slots);

/// Inverse of fill_template for one template; empty when the text does not fit.
std::map<std::string, std::string> extract_slots(const std::string& tmpl, const std::string& text);

struct Verbalized {
  std::size_t statement = 0;
  std::string scenario;
  int template_index = 0;
  std::string sentence;
};

struct Description {
  std::string text;
  std::vector<Verbalized> parts;  // in narrative order
};

struct DescribeOptions {
  /// Reorder sentences at random while keeping every reference after the
  /// sentence that introduces it.
  bool shuffle = false;
};

Description describe_program(const dsl::Program& p, const TemplateBank& bank, std::uint64_t seed,
                             const DescribeOptions& opts = {});

}  // namespace mbl::synth
