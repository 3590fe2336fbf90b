// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "mbl/harness/io.hpp"

namespace mbl::testdata {

std::string path(const std::string& relative) { return std::string(MBL_TEST_DATA) + "/" + relative; }

std::string read(const std::string& relative) { return harness::read_file(path(relative)); }

std::vector<std::pair<std::string, std::string>> golds() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : std::filesystem::directory_iterator(path("golds"))) {
    if (e.path().extension() == ".mbl") out.emplace_back(e.path().stem().string(), harness::read_file(e.path()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Snippet> table1() {
  std::vector<Snippet> out;
  std::istringstream in(read("table1_snippets.jsonl"));
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    out.push_back({j.at("name"), j.at("setup"), j.at("snippet"), j.at("entity"), j.at("count")});
  }
  return out;
}

std::vector<Corrupted> corrupted() {
  std::vector<Corrupted> out;
  std::istringstream in(read("corrupted/MANIFEST.tsv"));
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    Corrupted c;
    std::getline(row, c.file, '\t');
    std::getline(row, c.type, '\t');
    std::getline(row, c.note);
    c.source = read("corrupted/" + c.file);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace mbl::testdata
