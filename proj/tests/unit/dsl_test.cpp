// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "mbl/dsl/canonical.hpp"
#include "mbl/dsl/check.hpp"
#include "mbl/dsl/parser.hpp"
#include "mbl/dsl/repair.hpp"
#include "mbl/dsl/signatures.hpp"

using namespace mbl::dsl;

namespace {

const char* kTwoModules =
    "Module m = new Module(name: \"M\", point: initial_point, length: 3000, width: 4000);\n"
    "Module n = new Module(name: \"N\", module: m, direction: \"east\", length: 3000, width: 4000);\n";

std::vector<DiagCategory> categories(const std::string& src) {
  std::vector<DiagCategory> out;
  for (const auto& d : compile(src).diagnostics) {
    if (d.severity == Severity::Error) out.push_back(d.category);
  }
  return out;
}

}  // namespace

TEST(Numbers, CanonicalText) {
  EXPECT_EQ(format_number(3100), "3100");
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(2.25), "2.25");
  EXPECT_EQ(format_number(-0.0), "0");
}

TEST(Parser, ReadsEveryGold) {
  for (const auto& [id, src] : mbl::testdata::golds()) {
    const auto c = compile(src);
    EXPECT_TRUE(c.ok()) << id << ": " << (c.diagnostics.empty() ? "" : format_diagnostic(c.diagnostics[0]));
  }
}

TEST(Parser, SplitDestructuringBindsPieces) {
  const auto r = parse_program(
      "Module a = new Module(name: \"A\", point: initial_point, length: 3000, width: 4000);\n"
      "List<Module> parts = Utils.SplitModule(module: a, direction: \"west-east\", ratio: 0.5);\n"
      "Module a_north = parts[0];\nModule a_south = parts[1];\n");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.program.statements.size(), 2u);
  const auto& split = r.program.statements[1];
  ASSERT_EQ(split.pieces.size(), 2u);
  EXPECT_EQ(split.pieces[0].index, 0);
  EXPECT_EQ(split.pieces[0].binding.name, "a_north");
  EXPECT_EQ(split.pieces[1].binding.name, "a_south");
}

TEST(Parser, SyntaxErrorCarriesSpan) {
  const auto c = compile("Module m = new Module(name: \"M\" point: initial_point, length: 1, width: 1);");
  ASSERT_FALSE(c.ok());
  EXPECT_EQ(c.diagnostics[0].category, DiagCategory::Syntax);
  EXPECT_EQ(c.diagnostics[0].span.line, 1);
  EXPECT_EQ(c.diagnostics[0].span.column, 33);
}

TEST(Check, UnknownFunction) {
  EXPECT_EQ(categories(std::string(kTwoModules) + "Utils.CreateWindow(module: m);"),
            std::vector<DiagCategory>{DiagCategory::UnknownOp});
}

TEST(Check, BadEnumValue) {
  EXPECT_EQ(categories(std::string(kTwoModules) +
                       "Utils.CreateHole(module: m, direction: \"nort\", alignment: \"none\", offset: 0, dimension: 900);"),
            std::vector<DiagCategory>{DiagCategory::EnumValue});
}

TEST(Check, UndefinedAndRedefined) {
  EXPECT_EQ(categories("Utils.CreateHole(module: q, direction: \"north\", alignment: \"none\", offset: 0, dimension: 9);"),
            std::vector<DiagCategory>{DiagCategory::UndefinedName});
  EXPECT_EQ(categories("Module m = new Module(name: \"M\", point: initial_point, length: 3000, width: 4000);\n"
                       "Module m = new Module(name: \"M\", point: initial_point, length: 3000, width: 4000);"),
            std::vector<DiagCategory>{DiagCategory::Redefinition});
}

TEST(Check, PositionalOrderMistake) {
  EXPECT_EQ(categories("Module m = new Module(\"M\", initial_point, 3000, 4000);\n"
                       "Module n = new Module(\"N\", m, 3000, \"east\", 4000);"),
            std::vector<DiagCategory>{DiagCategory::WrongArgOrder});
}

TEST(Check, MissingRequiredArgument) {
  EXPECT_EQ(categories("Module m = new Module(name: \"M\", point: initial_point, width: 4000);"),
            std::vector<DiagCategory>{DiagCategory::Arity});
}

TEST(Check, UnknownRoomType) {
  const std::string src = "Module m = new Module(name: \"M\", point: initial_point, length: 3000, width: 4000);\n"
                          "Unit u = new Unit(name: \"U\", modules: new List<Module> { m });\n"
                          "Room r = new Room(name: \"Garage\", module: m, unit: u, regular: true);";
  EXPECT_EQ(categories(src), std::vector<DiagCategory>{DiagCategory::EnumValue});
}

TEST(Canonical, RoundTripIsStructurallyEqual) {
  for (const auto& [id, src] : mbl::testdata::golds()) {
    const auto a = parse_program(src);
    const auto b = parse_program(canonicalize(a.program));
    ASSERT_TRUE(b.ok()) << id;
    EXPECT_TRUE(structurally_equal(a.program, b.program)) << id;
    EXPECT_EQ(canonicalize(b.program), canonicalize(a.program)) << id;
  }
}

TEST(Canonical, PositionalTwinCanonicalizesIdentically) {
  for (const auto& [id, src] : mbl::testdata::golds()) {
    const auto named = compile(src);
    const auto positional = to_positional(named.parsed.program);
    const auto twin = compile(positional);
    ASSERT_TRUE(twin.ok()) << id << "\n" << positional;
    EXPECT_EQ(canonicalize(twin.parsed.program), canonicalize(named.parsed.program)) << id;
  }
}

TEST(Canonical, PositionalText) {
  const auto c = compile(kTwoModules);
  EXPECT_EQ(to_positional(c.parsed.program),
            "Module m = new Module(\"M\", initial_point, 3000, 4000);\n"
            "Module n = new Module(\"N\", m, \"east\", 3000, 4000);\n");
}

TEST(Canonical, NamedArgumentOrderDoesNotMatter) {
  const auto a = compile("Module m = new Module(name: \"M\", point: initial_point, length: 3000, width: 4000);");
  const auto b = compile("Module m = new Module(width: 4000, length: 3000, point: initial_point, name: \"M\");");
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(canonicalize(a.parsed.program), canonicalize(b.parsed.program));
}

TEST(Signatures, SemanticLabel) {
  EXPECT_EQ(semantic_label("Living Room 2"), "living room");
  EXPECT_EQ(semantic_label("Bedroom"), "bedroom");
}

TEST(Repair, FixesEachCorruptedProgram) {
  for (const auto& c : mbl::testdata::corrupted()) {
    const auto r = repair_source(c.source);
    if (r.unrepairable) continue;
    EXPECT_TRUE(compile(canonicalize(r.program)).ok()) << c.file;
    ASSERT_FALSE(r.error_trajectory.empty()) << c.file;
    EXPECT_EQ(r.error_trajectory.back(), 0u) << c.file;
    for (std::size_t k = 1; k < r.error_trajectory.size(); ++k) {
      EXPECT_LT(r.error_trajectory[k], r.error_trajectory[k - 1]) << c.file;
    }
  }
}

TEST(Repair, ReordersPositionalArguments) {
  const auto r = repair_source("Module m = new Module(\"M\", initial_point, 3000, 4000);\n"
                               "Module n = new Module(\"N\", m, 3000, \"east\", 4000);");
  ASSERT_FALSE(r.unrepairable) << r.reason;
  const auto text = canonicalize(r.program);
  EXPECT_NE(text.find("direction: \"east\", length: 3000, width: 4000"), std::string::npos) << text;
}

TEST(Repair, MissingLengthIsUnrepairable) {
  const auto r = repair_source("Module m = new Module(name: \"M\", point: initial_point, width: 4000);");
  EXPECT_TRUE(r.unrepairable);
  EXPECT_NE(r.reason.find("length"), std::string::npos);
}

TEST(Repair, CleanProgramOnlyGainsDefaults) {
  const auto r = repair_source(kTwoModules);
  ASSERT_FALSE(r.unrepairable);
  EXPECT_EQ(r.error_trajectory, std::vector<std::size_t>{0});
  EXPECT_NE(canonicalize(r.program).find("alignment: \"none\""), std::string::npos);
}

TEST(Repair, RepeatedStatementIsDropped) {
  const std::string room = "Room r = new Room(name: \"Bedroom\", module: m, unit: u, regular: true);\n";
  const auto r = repair_source(std::string(kTwoModules) + "Unit u = new Unit(name: \"U\", modules: new List<Module> { m });\n" +
                               room + room);
  ASSERT_FALSE(r.unrepairable) << r.reason;
  EXPECT_EQ(r.program.statements.size(), 4u);
  EXPECT_EQ(r.error_trajectory, (std::vector<std::size_t>{1, 0}));
}

TEST(Repair, SwappedPairMovesOnlyThoseTwo) {
  const auto r = repair_source("Module m = new Module(\"M\", initial_point, 3000, 4000);\n"
                               "Module n = new Module(\"N\", m, \"east\", 3000, \"north\", 4000);");
  ASSERT_FALSE(r.unrepairable) << r.reason;
  EXPECT_NE(canonicalize(r.program).find("direction: \"east\", length: 3000, width: 4000, alignment: \"north\""),
            std::string::npos)
      << canonicalize(r.program);
}
