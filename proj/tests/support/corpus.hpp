// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mbl::testdata {

std::string path(const std::string& relative);
std::string read(const std::string& relative);

/// (stem, source) for every gold program, sorted by name.
std::vector<std::pair<std::string, std::string>> golds();

struct Snippet {
  std::string name;
  std::string setup;
  std::string snippet;
  std::string entity;  // module | unit | room | door | hole
  int count = 1;       // entities the snippet creates
};
std::vector<Snippet> table1();

struct Corrupted {
  std::string file;
  std::string type;  // order | structure | argument | function | callee
  std::string note;
  std::string source;
};
std::vector<Corrupted> corrupted();

}  // namespace mbl::testdata
