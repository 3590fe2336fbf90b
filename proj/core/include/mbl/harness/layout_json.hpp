// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mbl/kernel/document.hpp"
#include "mbl/topology/relations.hpp"

namespace mbl::harness {

inline constexpr int kLayoutSchemaVersion = 1;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical layout JSON: fixed key order, shortest round-trip numbers,
/// two-space indent, trailing newline.
std::string export_layout_json(const kernel::LayoutDocument& doc, const topology::TopologyReport* topology = nullptr);

/// Reads a document written by export_layout_json (topology is ignored).
kernel::LayoutDocument import_layout_json(std::string_view text);

}  // namespace mbl::harness
