// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mbl::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kCompileError = 1;
inline constexpr int kExecError = 2;
inline constexpr int kUsageError = 3;
inline constexpr int kTransportError = 4;

struct RunArgs {
  std::string input;
  std::string json_out = "-";
  std::string svg_out;
  bool repair = false;
  bool topology = false;
};

struct EvalArgs {
  std::string pred;
  std::string gold;
  std::string out_dir;
  bool coordinate = false;
  std::vector<std::string> group_by;
  int module_threshold = 2;
  int unit_threshold = 1;
  int room_threshold = 4;
  double eps = 1.0;
};

struct SynthArgs {
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::string config;
  std::string from;  // gold programs to describe instead of synthesizing
  int descriptions = 10;
  bool skeleton = false;
  bool shuffle = false;
  std::string out = "-";
};

struct RenderArgs {
  std::string input;
  std::string svg_out = "-";
  bool no_labels = false;
};

struct GenArgs {
  std::string description;
  std::string input;  // JSONL with id + description
  std::string fixture;
  std::string endpoint;
  std::string prompt;
  std::optional<double> temperature;
  std::string out = "-";
};

int run(const RunArgs& a);
int eval(const EvalArgs& a);
int synth(const SynthArgs& a);
int render(const RenderArgs& a);
int gen(const GenArgs& a);

}  // namespace mbl::cli
