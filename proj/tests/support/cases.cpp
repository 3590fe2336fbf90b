// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "cases.hpp"

namespace mbl::testdata {

namespace {

const char* const kS1 = "Module a = new Module(name: \"Module A\", point: initial_point, length: 3000, width: 4000);\n";
const char* const kS2 =
    "Module b = new Module(name: \"Module B\", module: a, direction: \"east\", length: 2000, width: 4000, alignment: \"north\");\n";
const char* const kS3 = "Unit u = new Unit(name: \"Unit 1\", modules: new List<Module> { a, b });\n";
const char* const kS4 = "Room r = new Room(name: \"Living Room\", module: a, unit: u, regular: true);\n";

}  // namespace

const std::string& f1_gold() {
  static const std::string g = std::string(kS1) + kS2 + kS3 + kS4;
  return g;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  std::size_t at = 0;
  while ((at = s.find(from, at)) != std::string::npos) {
    s.replace(at, from.size(), to);
    at += to.size();
  }
  return s;
}

std::vector<F1Case> f1_cases() {
  const auto& g = f1_gold();
  // P and R per case, F1 = 2PR / (P + R)
  return {
      {"identical", g, 1.0},
      {"three of four", std::string(kS1) + kS2 + kS3, 6.0 / 7.0},                               // P 3/3, R 3/4
      {"one length off", replace_all(g, "length: 2000", "length: 2500"), 0.75},    // P 3/4, R 3/4
      {"one extra room", g + "Room q = new Room(name: \"Bedroom\", module: b, unit: u, regular: true);\n",
       8.0 / 9.0},                                                                 // P 4/5, R 4/4
      {"nothing", "", 0.0},
      {"renamed variable", replace_all(replace_all(g, "Module a =", "Module m1 ="), "a,", "m1,"), 1.0},
      {"positional",
       "Module a = new Module(\"Module A\", initial_point, 3000, 4000);\n"
       "Module b = new Module(\"Module B\", a, \"east\", 2000, 4000, \"north\");\n"
       "Unit u = new Unit(\"Unit 1\", new List<Module> { a, b });\n"
       "Room r = new Room(\"Living Room\", a, u, true);\n",
       1.0},
      {"other room type", replace_all(g, "Living Room", "Kitchen"), 0.75},
      {"first only", kS1, 0.4},  // P 1/1, R 1/4
      // the label feeds every reference to A: only the unrelated unit name survives, and it lists A
      {"relabelled module", replace_all(g, "Module A", "Module Z"), 0.0},
  };
}

}  // namespace mbl::testdata
