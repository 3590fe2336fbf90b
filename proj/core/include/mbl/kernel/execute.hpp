// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbl/dsl/ast.hpp"
#include "mbl/kernel/document.hpp"
#include "mbl/kernel/operations.hpp"

namespace mbl::kernel {

struct ExecError {
  std::size_t statement = 0;
  ExecCategory category = ExecCategory::NotCompiled;
  std::string message;
};

std::string format_exec_error(const ExecError& e);

struct ExecResult {
  LayoutDocument document;  // state before the failing statement on error
  std::optional<ExecError> error;

  bool ok() const { return !error.has_value(); }
};

/// Runs statements one at a time. A failing statement leaves document and
/// name bindings as they were.
class Executor {
 public:
  explicit Executor(Config config = {});

  std::optional<ExecError> apply(const dsl::ActionStatement& s, std::size_t index);

  const LayoutDocument& document() const { return doc_; }
  LayoutDocument take() { return std::move(doc_); }

  struct Binding {
    dsl::EntityKind kind;
    std::vector<int> ids;
  };

 private:
  void run(const dsl::ActionStatement& s, std::size_t index);

  LayoutDocument doc_;
  std::map<std::string, Binding> env_;
};

ExecResult execute(const dsl::Program& program, const Config& config = {});

}  // namespace mbl::kernel
