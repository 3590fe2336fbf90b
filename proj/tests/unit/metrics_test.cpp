// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cases.hpp"
#include "corpus.hpp"
#include "mbl/dsl/canonical.hpp"
#include "mbl/dsl/check.hpp"
#include "mbl/kernel/execute.hpp"
#include "mbl/metrics/assignment.hpp"
#include "mbl/metrics/metrics.hpp"
#include "mbl/synth/coordinate.hpp"
#include "oracles.hpp"

using namespace mbl;

namespace {

const std::string& kGold = testdata::f1_gold();

std::vector<metrics::CanonicalInstance> inst(const std::string& src) {
  return metrics::instances(dsl::parse_program(src).program);
}

std::string replace(const std::string& s, const std::string& from, const std::string& to) {
  return testdata::replace_all(s, from, to);
}

}  // namespace

TEST(Prf, Formula) {
  const auto r = metrics::make_prf(3, 3, 4);
  EXPECT_DOUBLE_EQ(r.precision, 1.0);
  EXPECT_DOUBLE_EQ(r.recall, 0.75);
  EXPECT_NEAR(r.f1, 0.857142857142857, 1e-12);
  EXPECT_DOUBLE_EQ(metrics::make_prf(0, 0, 0).f1, 1.0);
  EXPECT_DOUBLE_EQ(metrics::make_prf(0, 2, 0).f1, 0.0);
}

TEST(InstanceF1, HandCountedPairs) {
  const auto gold = inst(kGold);
  for (const auto& c : testdata::f1_cases()) {
    EXPECT_NEAR(metrics::instance_f1(inst(c.pred), gold).f1, c.instance_f1, 1e-12) << c.name << "\n" << c.pred;
  }
}

TEST(ArgumentF1, OneValueOff) {
  const auto gold = inst(kGold);
  double total = 0;
  for (const auto& i : gold) total += static_cast<double>(i.args.size());
  const auto r = metrics::argument_f1(inst(replace(kGold, "length: 2000", "length: 2500")), gold);
  EXPECT_DOUBLE_EQ(r.matched, total - 1);
  EXPECT_NEAR(r.f1, (total - 1) / total, 1e-12);
}

TEST(ArgumentF1, PartialCreditForNearMiss) {
  // instance-level it is a miss, argument-level most of it still counts
  const auto gold = inst(kGold);
  const auto pred = inst(replace(kGold, "length: 2000", "length: 2500"));
  EXPECT_GT(metrics::argument_f1(pred, gold).f1, metrics::instance_f1(pred, gold).f1);
}

TEST(Assignment, MatchesBruteForce) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> val(0.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    std::vector<std::vector<double>> w(rows, std::vector<double>(cols));
    for (auto& row : w) {
      for (auto& v : row) v = std::round(val(rng));
    }
    const auto got = metrics::max_weight_assignment(w);
    ASSERT_EQ(got.size(), rows);
    double sum = 0;
    std::vector<int> used(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
      if (got[i] < 0) continue;
      ASSERT_LT(static_cast<std::size_t>(got[i]), cols);
      EXPECT_EQ(used[static_cast<std::size_t>(got[i])]++, 0);
      sum += w[i][static_cast<std::size_t>(got[i])];
    }
    // brute force over column orders padded to the larger side
    const std::size_t n = std::max(rows, cols);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = 0;
    do {
      double s = 0;
      for (std::size_t i = 0; i < rows; ++i) {
        if (perm[i] < cols) s += w[i][perm[i]];
      }
      best = std::max(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_DOUBLE_EQ(sum, best) << "trial " << trial;
  }
}

TEST(CategoryIou, MatchesEnumeration) {
  std::mt19937_64 rng(11);
  const char* labels[] = {"bedroom", "kitchen", "bathroom"};
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<metrics::Box> pred, gold;
    std::vector<oracle::LabeledRect> opred, ogold;
    auto draw = [&](std::vector<metrics::Box>& out, std::vector<oracle::LabeledRect>& o, std::size_t count) {
      for (std::size_t k = 0; k < count; ++k) {
        const double x = static_cast<double>(rng() % 40) * 100, y = static_cast<double>(rng() % 40) * 100;
        const double w = 500 + static_cast<double>(rng() % 30) * 100, h = 500 + static_cast<double>(rng() % 30) * 100;
        const geom::Rect r{{x, y}, {x + w, y + h}};
        const std::string l = labels[rng() % 3];
        out.push_back({l, geom::Region(r)});
        o.push_back({l, {r}});
      }
    };
    // unequal counts make the unmatched penalty show
    draw(pred, opred, 1 + static_cast<std::size_t>(trial % 4));
    draw(gold, ogold, 1 + static_cast<std::size_t>((trial * 3 + 1) % 5));
    const auto got = metrics::category_iou(pred, gold);
    ASSERT_TRUE(got.has_value());
    EXPECT_NEAR(*got, oracle::enumerated_category_iou(opred, ogold), 1e-12) << "trial " << trial;
  }
}

TEST(CategoryIou, EmptySides) {
  EXPECT_FALSE(metrics::category_iou({}, {}).has_value());
  const std::vector<metrics::Box> one{{"bedroom", geom::Region(geom::Rect{{0, 0}, {1, 1}})}};
  EXPECT_DOUBLE_EQ(*metrics::category_iou(one, {}), 0.0);
  EXPECT_DOUBLE_EQ(*metrics::category_iou({}, one), 0.0);
}

TEST(Evaluate, SelfEvaluationIsPerfect) {
  for (const auto& [id, src] : testdata::golds()) {
    const auto g = metrics::prepare_gold(id, src);
    const auto r = metrics::evaluate(g, src);
    EXPECT_TRUE(r.compiled && r.executed && r.passed) << id;
    EXPECT_DOUBLE_EQ(r.instance.f1, 1.0) << id;
    EXPECT_DOUBLE_EQ(r.argument.f1, 1.0) << id;
    EXPECT_DOUBLE_EQ(r.iou.overall, 1.0) << id;
  }
}

TEST(Evaluate, MissingAndBrokenPredictions) {
  const auto g = metrics::prepare_gold("x", kGold);
  const auto missing = metrics::evaluate(g, std::nullopt);
  EXPECT_TRUE(missing.missing);
  EXPECT_FALSE(missing.compiled);
  EXPECT_DOUBLE_EQ(missing.iou.overall, 0.0);

  const auto broken = metrics::evaluate(g, kGold.substr(0, kGold.find('\n') + 1) + "Utils.CreateWindow(module: a);\n");
  EXPECT_FALSE(broken.compiled);
  EXPECT_DOUBLE_EQ(broken.iou.overall, 0.0);
  // the module statement still counts towards F1: 1 of 2 predicted, 1 of 4 gold
  EXPECT_NEAR(broken.instance.f1, 2.0 * 0.5 * 0.25 / 0.75, 1e-12);
}

TEST(Evaluate, PassToleratesSubMillimetreDrift) {
  EXPECT_TRUE(metrics::check_pass(replace(kGold, "length: 2000", "length: 2000.4"), kGold));
  EXPECT_FALSE(metrics::check_pass(replace(kGold, "length: 2000", "length: 2010"), kGold));
}

TEST(Evaluate, CoordinateOutputScoresIouOnly) {
  const auto g = metrics::prepare_gold("x", kGold);
  const auto seq = synth::to_coordinate_seq(g.document);
  metrics::EvalOptions o;
  o.coordinate_output = true;
  const auto r = metrics::evaluate(g, seq, o, &synth::parse_coordinate_boxes);
  EXPECT_DOUBLE_EQ(r.iou.overall, 1.0);
  EXPECT_FALSE(r.compiled);
}

TEST(Batch, CohortsPartitionRecords) {
  std::vector<metrics::GoldRecord> golds;
  std::map<std::string, std::string> preds;
  for (const auto& [id, src] : testdata::golds()) {
    golds.push_back(metrics::prepare_gold(id, src));
    preds[id] = src;
  }
  preds.erase(golds.front().id);
  metrics::BatchOptions o;
  o.group_by = {"modules", "units", "rooms"};
  const auto rep = metrics::batch_evaluate(golds, preds, o);
  EXPECT_EQ(rep.records.size(), golds.size());
  EXPECT_EQ(rep.missing, std::vector<std::string>{golds.front().id});
  for (const std::string key : {"modules<=2", "units<=1", "rooms<=4"}) {
    const std::string other = replace(key, "<=", ">");
    const std::size_t a = rep.cohorts.count(key) ? rep.cohorts.at(key).records : 0;
    const std::size_t b = rep.cohorts.count(other) ? rep.cohorts.at(other).records : 0;
    EXPECT_EQ(a + b, golds.size()) << key;
  }
  std::size_t small = 0;
  for (const auto& g : golds) small += g.modules <= 2 ? 1 : 0;
  EXPECT_EQ(rep.cohorts.at("modules<=2").records, small);
  EXPECT_NEAR(rep.overall.pass_rate, (golds.size() - 1.0) / golds.size(), 1e-12);
  const auto md = metrics::aggregate_markdown(rep);
  EXPECT_NE(md.find("| all |"), std::string::npos);
  const auto csv = metrics::aggregate_csv(rep);
  EXPECT_EQ(csv.find("\nall,"), csv.find('\n'));
}
