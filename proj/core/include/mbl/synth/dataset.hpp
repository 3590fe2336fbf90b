// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mbl/dsl/ast.hpp"
#include "mbl/synth/grammar.hpp"
#include "mbl/synth/templates.hpp"

namespace mbl::synth {

struct RecordStats {
  int tokens = 0;     // whitespace-delimited, description only
  int sentences = 0;  // period-delimited
  int modules = 0;
  int units = 0;
  int rooms = 0;
  int elements = 0;  // doors and holes
};

struct DatasetRecord {
  std::string id;
  std::string description;
  std::string skeleton;
  std::string code_named;
  std::string code_positional;
  std::string coordinate_seq;
  std::string provenance;  // original | partial-synthetic | full-synthetic
  RecordStats stats;
};

int count_tokens(const std::string& text);
/// A period ends a sentence when followed by whitespace or the end of text.
int count_sentences(const std::string& text);

/// Fills code, coordinate and stats fields from a compile-clean program.
/// Throws std::runtime_error if the program does not execute.
DatasetRecord make_record(std::string id, const dsl::Program& program, std::string description,
                          std::string provenance);

struct DatasetConfig {
  std::uint64_t seed = 0;
  int descriptions_per_design = 10;
  DescribeOptions describe;
};

/// Template descriptions for existing designs: n records per gold.
std::vector<DatasetRecord> build_partial(const std::vector<std::pair<std::string, std::string>>& golds,
                                         const DatasetConfig& config,
                                         const TemplateBank& bank = TemplateBank::standard());

/// `count` distinct synthesized programs with one description each.
std::vector<DatasetRecord> build_full(int count, const DatasetConfig& config, const CodeGrammar& grammar = {},
                                      const TemplateBank& bank = TemplateBank::standard());

}  // namespace mbl::synth
