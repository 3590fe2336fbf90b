// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mbl/dsl/canonical.hpp"
#include "mbl/dsl/check.hpp"
#include "mbl/dsl/repair.hpp"
#include "mbl/geom/ops.hpp"
#include "mbl/geom/region.hpp"
#include "mbl/harness/layout_json.hpp"
#include "mbl/harness/svg.hpp"
#include "mbl/kernel/execute.hpp"
#include "mbl/metrics/metrics.hpp"
#include "mbl/synth/grammar.hpp"
#include "mbl/synth/random.hpp"
#include "mbl/synth/templates.hpp"
#include "mbl/topology/relations.hpp"

using namespace mbl;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// the largest gold exercises the most operations
const std::string& big_gold() {
  static const std::string src = [] {
    std::string best;
    for (const auto& e : std::filesystem::directory_iterator(std::string(MBL_BENCH_DATA) + "/golds")) {
      auto s = slurp(e.path());
      if (s.size() > best.size()) best = std::move(s);
    }
    return best;
  }();
  return src;
}

const dsl::Program& big_program() {
  static const dsl::Program p = dsl::compile(big_gold()).parsed.program;
  return p;
}

const kernel::LayoutDocument& big_document() {
  static const kernel::LayoutDocument d = kernel::execute(big_program()).document;
  return d;
}

void BM_Compile(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(dsl::compile(big_gold()));
  st.SetBytesProcessed(static_cast<std::int64_t>(st.iterations() * big_gold().size()));
}
BENCHMARK(BM_Compile);

void BM_Canonicalize(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(dsl::canonicalize(big_program()));
}
BENCHMARK(BM_Canonicalize);

void BM_Repair(benchmark::State& st) {
  const auto src = slurp(std::string(MBL_BENCH_DATA) + "/corrupted/order_03.mbl");
  for (auto _ : st) benchmark::DoNotOptimize(dsl::repair_source(src));
}
BENCHMARK(BM_Repair);

void BM_Execute(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernel::execute(big_program()));
}
BENCHMARK(BM_Execute);

void BM_Topology(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(topology::analyze(big_document()));
}
BENCHMARK(BM_Topology);

void BM_LayoutJson(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(harness::export_layout_json(big_document()));
}
BENCHMARK(BM_LayoutJson);

void BM_Svg(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(harness::render_svg(big_document()));
}
BENCHMARK(BM_Svg);

void BM_SelfEvaluate(benchmark::State& st) {
  const auto gold = metrics::prepare_gold("g", big_gold());
  for (auto _ : st) benchmark::DoNotOptimize(metrics::evaluate(gold, big_gold()));
}
BENCHMARK(BM_SelfEvaluate);

void BM_RectIou(benchmark::State& st) {
  const geom::Rect a{{0, 0}, {3000, 4000}}, b{{1200, 800}, {5200, 3900}};
  for (auto _ : st) benchmark::DoNotOptimize(geom::rect_iou(a, b));
}
BENCHMARK(BM_RectIou);

void BM_RegionSubtract(benchmark::State& st) {
  const auto n = static_cast<int>(st.range(0));
  std::vector<geom::Rect> holes;
  for (int k = 0; k < n; ++k) {
    const double x = 100.0 + 900.0 * k;
    holes.push_back({{x, 100}, {x + 500, 600}});
  }
  const geom::Region outer(geom::Rect{{0, 0}, {900.0 * n + 200, 700}});
  const geom::Region cut(holes);
  for (auto _ : st) benchmark::DoNotOptimize(geom::Region::subtract(outer, cut));
}
BENCHMARK(BM_RegionSubtract)->RangeMultiplier(4)->Range(1, 64);

void BM_CategoryIou(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  synth::Rng rng(3);
  std::vector<metrics::Box> p, g;
  for (std::size_t k = 0; k < n; ++k) {
    for (auto* v : {&p, &g}) {
      const double x = rng.snapped(0, 20000, 100), y = rng.snapped(0, 20000, 100);
      v->push_back({"bedroom", geom::Region(geom::Rect{{x, y}, {x + 3000, y + 3000}})});
    }
  }
  for (auto _ : st) benchmark::DoNotOptimize(metrics::category_iou(p, g));
}
BENCHMARK(BM_CategoryIou)->RangeMultiplier(2)->Range(2, 32);

void BM_Synthesize(benchmark::State& st) {
  std::uint64_t k = 0;
  for (auto _ : st) benchmark::DoNotOptimize(synth::synthesize_code({}, synth::derive_seed(1, k++)));
}
BENCHMARK(BM_Synthesize);

void BM_Describe(benchmark::State& st) {
  std::uint64_t k = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(synth::describe_program(big_program(), synth::TemplateBank::standard(), k++));
  }
}
BENCHMARK(BM_Describe);

}  // namespace

BENCHMARK_MAIN();
