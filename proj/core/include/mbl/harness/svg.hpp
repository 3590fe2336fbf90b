// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "mbl/kernel/document.hpp"

namespace mbl::harness {

struct SvgOptions {
  double margin = 500.0;  // mm around the live modules
  double scale = 0.1;     // output px per mm
  bool labels = true;
};

/// Plan view, north up. Same document and options give the same bytes.
std::string render_svg(const kernel::LayoutDocument& doc, const SvgOptions& opts = {});

}  // namespace mbl::harness
