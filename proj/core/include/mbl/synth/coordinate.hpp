// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mbl/kernel/document.hpp"
#include "mbl/metrics/metrics.hpp"

namespace mbl::synth {

class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// "MODULE:\n[Module 1|x=0|y=0|length=3100.0|width=5420.0]\nUnit:\n...\nRoom:\n..."
/// Entities in creation order; a non-rectangular entity is written as one
/// entry per rectangle, all carrying its label.
std::string to_coordinate_seq(const kernel::LayoutDocument& doc);

/// Skeleton document (labelled regions only). Entries that share a label
/// within a segment form one entity.
kernel::LayoutDocument parse_coordinate_seq(std::string_view text);

/// For metric evaluation of coordinate-format predictions.
std::optional<metrics::LayoutBoxes> parse_coordinate_boxes(std::string_view text);

}  // namespace mbl::synth
