// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mbl::harness {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temp file, then renames over the target, so readers
/// never see a half-written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace mbl::harness
