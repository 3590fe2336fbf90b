// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "mbl/dsl/canonical.hpp"
#include "mbl/dsl/check.hpp"
#include "mbl/kernel/execute.hpp"
#include "mbl/synth/coordinate.hpp"
#include "mbl/synth/dataset.hpp"
#include "mbl/synth/grammar.hpp"
#include "mbl/synth/random.hpp"
#include "mbl/synth/skeleton.hpp"
#include "mbl/synth/templates.hpp"
#include "mbl/topology/relations.hpp"

using namespace mbl;

namespace {

kernel::LayoutDocument run(const std::string& src) {
  const auto r = kernel::execute(dsl::compile(src).parsed.program);
  EXPECT_TRUE(r.ok());
  return r.document;
}

const std::string kOne =
    "Module m = new Module(name: \"Module 1\", point: initial_point, length: 3100, width: 5420);\n"
    "Unit u = new Unit(name: \"Unit 1\", modules: new List<Module> { m });\n"
    "Room r = new Room(name: \"Bedroom\", module: m, unit: u, regular: true);\n";

}  // namespace

TEST(Coordinate, ModuleLine) {
  EXPECT_EQ(synth::to_coordinate_seq(run(kOne)),
            "MODULE:\n[Module 1|x=0|y=0|length=3100.0|width=5420.0]\n"
            "Unit:\n[Unit 1|x=0|y=0|length=3100.0|width=5420.0]\n"
            "Room:\n[Bedroom|x=0|y=0|length=3100.0|width=5420.0]");
}

TEST(Coordinate, FixedPointOnGolds) {
  for (const auto& [id, src] : testdata::golds()) {
    const auto seq = synth::to_coordinate_seq(run(src));
    EXPECT_EQ(synth::to_coordinate_seq(synth::parse_coordinate_seq(seq)), seq) << id;
  }
}

TEST(Coordinate, MultiPartRoomKeepsLabel) {
  const auto seq = synth::to_coordinate_seq(run(testdata::read("golds/g09_at_point.mbl")));
  std::size_t n = 0;
  for (std::size_t at = 0; (at = seq.find("[Living Room|", at)) != std::string::npos; ++at) ++n;
  EXPECT_EQ(n, 3u);
  const auto boxes = synth::parse_coordinate_boxes(seq);
  ASSERT_TRUE(boxes);
  std::size_t living = 0;
  for (const auto& b : boxes->rooms) living += b.label == "living room" ? 1 : 0;
  EXPECT_EQ(living, 1u);
}

TEST(Coordinate, RejectsMalformed) {
  EXPECT_THROW(synth::parse_coordinate_seq("MODULE:\n[Module 1|x=0|y=0|length=abc|width=1]"), synth::FormatError);
  EXPECT_FALSE(synth::parse_coordinate_boxes("not a layout").has_value());
}

TEST(Grammar, ProgramsAreValidAndClear) {
  for (std::uint64_t seed = 100; seed < 150; ++seed) {
    const auto p = synth::synthesize_code({}, seed);
    const auto c = dsl::compile(p.source);
    ASSERT_TRUE(c.ok()) << p.source;
    EXPECT_EQ(dsl::canonicalize(c.parsed.program), p.source);
    const auto r = kernel::execute(c.parsed.program);
    ASSERT_TRUE(r.ok()) << p.source;
    EXPECT_TRUE(topology::overlapping_rooms(r.document).empty()) << p.source;
    for (const auto& v : topology::validate_containment(r.document)) EXPECT_TRUE(v.pass) << p.source;
  }
}

TEST(Grammar, SameSeedSameProgram) {
  EXPECT_EQ(synth::synthesize_code({}, 42).source, synth::synthesize_code({}, 42).source);
  EXPECT_NE(synth::synthesize_code({}, 42).source, synth::synthesize_code({}, 43).source);
}

TEST(Grammar, NoAttemptsLeftGivesUp) {
  synth::CodeGrammar g;
  g.max_attempts = 0;
  EXPECT_THROW(synth::synthesize_code(g, 1), synth::GenerationExhausted);
}

TEST(Random, DerivedSeedsDiffer) {
  EXPECT_NE(synth::derive_seed(1, 0), synth::derive_seed(1, 1));
  EXPECT_NE(synth::derive_seed(1, 0), synth::derive_seed(2, 0));
  synth::Rng a(5), b(5);
  for (int k = 0; k < 10; ++k) EXPECT_EQ(a.snapped(1000, 2000, 10), b.snapped(1000, 2000, 10));
  synth::Rng c(9);
  for (int k = 0; k < 1000; ++k) {
    const double v = c.snapped(1005, 1995, 10);
    EXPECT_GE(v, 1010);
    EXPECT_LE(v, 1990);
  }
}

TEST(Templates, FiveForEveryScenario) {
  for (const auto& [scenario, t] : synth::TemplateBank::standard().entries()) {
    for (const auto& s : t) EXPECT_FALSE(s.empty()) << scenario;
  }
  EXPECT_THROW(synth::TemplateBank::standard().at("no-such-scenario"), synth::MissingTemplate);
}

TEST(Templates, FillAndExtractAreInverse) {
  const std::string t = "Add a {dimension} mm hole on the {direction} side of {module}.";
  const std::map<std::string, std::string> slots{{"dimension", "900"}, {"direction", "north"}, {"module", "Module 1"}};
  const auto text = synth::fill_template(t, slots);
  EXPECT_EQ(text, "Add a 900 mm hole on the north side of Module 1.");
  EXPECT_EQ(synth::extract_slots(t, text), slots);
  EXPECT_TRUE(synth::extract_slots(t, "Something else entirely.").empty());
}

TEST(Templates, ArticleBeforeEight) {
  const std::string t = "Add a {dimension} mm hole.";
  const std::map<std::string, std::string> slots{{"dimension", "8000"}};
  const auto text = synth::fill_template(t, slots);
  EXPECT_EQ(text, "Add an 8000 mm hole.");
  EXPECT_EQ(synth::extract_slots(t, text), slots);
}

TEST(Templates, GoldSentencesRecoverTheirSlots) {
  const auto& bank = synth::TemplateBank::standard();
  for (const auto& [id, src] : testdata::golds()) {
    const auto prog = dsl::compile(src).parsed.program;
    const auto d = synth::describe_program(prog, bank, 7);
    synth::LabelMap labels;
    std::vector<std::map<std::string, std::string>> per_statement;
    for (const auto& s : prog.statements) {
      per_statement.push_back(synth::slot_values(s, labels));
      synth::record_labels(s, labels);
    }
    for (const auto& part : d.parts) {
      const auto& tmpl = bank.at(part.scenario)[static_cast<std::size_t>(part.template_index)];
      const auto got = synth::extract_slots(tmpl, part.sentence);
      ASSERT_FALSE(got.empty()) << id << ": " << part.sentence;
      for (const auto& [k, v] : got) EXPECT_EQ(per_statement[part.statement].at(k), v) << id << " " << k;
    }
  }
}

TEST(Templates, ShuffleKeepsReferencesAfterIntroductions) {
  const auto prog = dsl::compile(testdata::read("golds/g22_mixed.mbl")).parsed.program;
  synth::DescribeOptions o;
  o.shuffle = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = synth::describe_program(prog, synth::TemplateBank::standard(), seed, o);
    std::set<std::size_t> seen;
    for (const auto& part : d.parts) {
      for (const auto& a : prog.statements[part.statement].args) {
        const auto* ref = std::get_if<dsl::Ref>(&a.value);
        if (!ref) continue;
        const auto decl = prog.symbols.at(ref->name);
        EXPECT_TRUE(seen.count(decl)) << "seed " << seed << ": " << part.sentence;
      }
      seen.insert(part.statement);
    }
  }
}

TEST(Skeleton, CountsAndRoundTrip) {
  const auto doc = run(testdata::read("golds/g03_split_row.mbl"));
  const auto c = synth::count_layout(doc);
  EXPECT_EQ(c.modules, 3);
  EXPECT_EQ(c.units, 2);
  EXPECT_EQ(c.living_rooms, 1);
  EXPECT_EQ(c.bedrooms, 2);
  EXPECT_EQ(c.kitchens, 1);
  EXPECT_EQ(c.bathrooms, 0);
  const auto s = synth::skeleton_instruction(c);
  EXPECT_EQ(s, "Generate a layout with 3 module, 2 unit, 1 living room, 0 bathroom, 2 bedroom, 1 kitchen.");
  EXPECT_EQ(synth::parse_skeleton(s), c);
  EXPECT_FALSE(synth::parse_skeleton("Generate something nice.").has_value());
}

TEST(Dataset, TextStatistics) {
  EXPECT_EQ(synth::count_tokens("  two   words "), 2);
  EXPECT_EQ(synth::count_sentences("One. Two 2.5 m. Three."), 3);
  EXPECT_EQ(synth::count_sentences(""), 0);
}

TEST(Dataset, PartialRecordsPerGold) {
  synth::DatasetConfig cfg;
  cfg.descriptions_per_design = 3;
  const auto golds = testdata::golds();
  const auto recs = synth::build_partial(golds, cfg);
  ASSERT_EQ(recs.size(), golds.size() * 3);
  for (const auto& r : recs) {
    EXPECT_EQ(r.provenance, "partial-synthetic");
    EXPECT_EQ(r.stats.tokens, synth::count_tokens(r.description));
    const auto twin = dsl::compile(r.code_positional);
    ASSERT_TRUE(twin.ok()) << r.id;
    EXPECT_EQ(dsl::canonicalize(twin.parsed.program), r.code_named) << r.id;
  }
  EXPECT_NE(recs[0].description, recs[1].description);
}

TEST(Dataset, FullBuildIsDeterministicAndDistinct) {
  synth::DatasetConfig cfg;
  cfg.seed = 5;
  const auto a = synth::build_full(30, cfg);
  const auto b = synth::build_full(30, cfg);
  ASSERT_EQ(a.size(), 30u);
  std::set<std::string> codes;
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].code_named, b[k].code_named);
    EXPECT_EQ(a[k].description, b[k].description);
    codes.insert(a[k].code_named);
    EXPECT_EQ(a[k].provenance, "full-synthetic");
  }
  EXPECT_EQ(codes.size(), a.size());
}
