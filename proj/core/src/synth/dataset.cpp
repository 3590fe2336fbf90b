// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/synth/dataset.hpp"

#include <cctype>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "mbl/dsl/canonical.hpp"
#include "mbl/dsl/check.hpp"
#include "mbl/kernel/execute.hpp"
#include "mbl/synth/coordinate.hpp"
#include "mbl/synth/random.hpp"
#include "mbl/synth/skeleton.hpp"

namespace mbl::synth {

int count_tokens(const std::string& text) {
  int n = 0;
  bool in = false;
  for (char c : text) {
    const bool space = std::isspace(static_cast<unsigned char>(c)) != 0;
    if (!space && !in) ++n;
    in = !space;
  }
  return n;
}

int count_sentences(const std::string& text) {
  int n = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] != '.') continue;
    if (k + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[k + 1]))) ++n;
  }
  return n;
}

DatasetRecord make_record(std::string id, const dsl::Program& program, std::string description,
                          std::string provenance) {
  const auto run = kernel::execute(program);
  if (!run.ok()) throw std::runtime_error(id + ": " + kernel::format_exec_error(*run.error));
  DatasetRecord r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.skeleton = skeleton_instruction(run.document);
  r.code_named = dsl::canonicalize(program);
  r.code_positional = dsl::to_positional(program);
  r.coordinate_seq = to_coordinate_seq(run.document);
  r.provenance = std::move(provenance);
  r.stats.tokens = count_tokens(r.description);
  r.stats.sentences = count_sentences(r.description);
  r.stats.modules = static_cast<int>(run.document.live_modules().size());
  r.stats.units = static_cast<int>(run.document.units.size());
  r.stats.rooms = static_cast<int>(run.document.rooms.size());
  r.stats.elements = static_cast<int>(run.document.doors.size() + run.document.holes.size());
  return r;
}

std::vector<DatasetRecord> build_partial(const std::vector<std::pair<std::string, std::string>>& golds,
                                         const DatasetConfig& config, const TemplateBank& bank) {
  std::vector<DatasetRecord> out;
  for (std::size_t g = 0; g < golds.size(); ++g) {
    const auto& [id, source] = golds[g];
    const auto compiled = dsl::compile(source);
    if (!compiled.ok()) {
      throw std::runtime_error(id + ": " + dsl::format_diagnostic(compiled.diagnostics.front()));
    }
    for (int k = 0; k < config.descriptions_per_design; ++k) {
      const auto seed = derive_seed(config.seed, g * 1000u + static_cast<std::uint64_t>(k));
      auto d = describe_program(compiled.parsed.program, bank, seed, config.describe);
      out.push_back(make_record(id + "-d" + std::to_string(k), compiled.parsed.program, std::move(d.text),
                                "partial-synthetic"));
    }
  }
  return out;
}

std::vector<DatasetRecord> build_full(int count, const DatasetConfig& config, const CodeGrammar& grammar,
                                      const TemplateBank& bank) {
  std::vector<DatasetRecord> out;
  std::set<std::string> seen;
  std::uint64_t draw = 0;
  while (static_cast<int>(out.size()) < count) {
    if (draw > 20 * static_cast<std::uint64_t>(count) + 1000) {
      throw GenerationExhausted("too many duplicate programs; widen the grammar");
    }
    const auto seed = derive_seed(config.seed, draw++);
    auto p = synthesize_code(grammar, seed);
    if (!seen.insert(p.source).second) continue;
    auto d = describe_program(p.program, bank, seed ^ 0x5DEECE66Dull, config.describe);
    char id[32];
    std::snprintf(id, sizeof id, "syn-%05zu", out.size());
    out.push_back(make_record(id, p.program, std::move(d.text), "full-synthetic"));
  }
  return out;
}

}  // namespace mbl::synth
