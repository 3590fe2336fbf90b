// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mbl/metrics/metrics.hpp"
#include "mbl/synth/dataset.hpp"

namespace mbl::harness {

inline constexpr int kDatasetSchemaVersion = 1;

/// One line, no trailing newline. Keys follow DatasetRecord field order.
std::string to_jsonl(const synth::DatasetRecord& r);
synth::DatasetRecord dataset_record_from_json(std::string_view line);

std::string to_jsonl(const metrics::EvalReport& r, bool coordinate_output = false);

/// Concatenated lines, each newline-terminated; empty input gives "".
std::string dataset_jsonl(const std::vector<synth::DatasetRecord>& records);
std::vector<synth::DatasetRecord> read_dataset_jsonl(std::string_view text);

/// id -> program (or coordinate) text.
///
/// A directory maps every regular file's stem to its contents. A JSONL file
/// takes the id from "id" and the text from the first present of `fields`.
std::map<std::string, std::string> load_texts(const std::filesystem::path& path,
                                              const std::vector<std::string>& fields);

}  // namespace mbl::harness
