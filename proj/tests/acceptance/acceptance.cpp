// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion. argv[1] is the mbl binary.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cases.hpp"
#include "corpus.hpp"
#include "crosscheck.hpp"
#include "mbl/dsl/canonical.hpp"
#include "mbl/dsl/check.hpp"
#include "mbl/dsl/repair.hpp"
#include "mbl/geom/ops.hpp"
#include "mbl/harness/io.hpp"
#include "mbl/harness/layout_json.hpp"
#include "mbl/kernel/execute.hpp"
#include "mbl/metrics/metrics.hpp"
#include "mbl/synth/coordinate.hpp"
#include "mbl/synth/grammar.hpp"
#include "mbl/synth/random.hpp"
#include "oracles.hpp"

using namespace mbl;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... v) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, v...);
  return buf;
}

std::vector<dsl::Program> synthetic_programs(int n, std::uint64_t seed) {
  std::vector<dsl::Program> out;
  for (int k = 0; k < n; ++k) {
    out.push_back(synth::synthesize_code({}, synth::derive_seed(seed, static_cast<std::uint64_t>(k))).program);
  }
  return out;
}

// 1: golds evaluated against themselves
Outcome self_eval() {
  const auto t0 = Clock::now();
  std::vector<metrics::GoldRecord> golds;
  std::map<std::string, std::string> preds;
  for (const auto& [id, src] : testdata::golds()) {
    golds.push_back(metrics::prepare_gold(id, src));
    preds[id] = src;
  }
  const auto rep = metrics::batch_evaluate(golds, preds);
  const double dt = seconds_since(t0);
  const auto& a = rep.overall;
  const bool all = a.compile_rate == 1.0 && a.pass_rate == 1.0 && a.instance_f1 == 1.0 && a.argument_f1 == 1.0 &&
                   a.iou_overall == 1.0 && a.iou_module == 1.0 && a.iou_unit == 1.0 && a.iou_room == 1.0;
  return {golds.size() >= 20 && all && dt < 5.0,
          fmt("%zu golds, compile %.4f pass %.4f instF1 %.4f argF1 %.4f IoU %.4f, %.2f s", golds.size(),
              a.compile_rate, a.pass_rate, a.instance_f1, a.argument_f1, a.iou_overall, dt)};
}

// 2: each documented snippet creates entities of its own category
Outcome snippets() {
  const auto t0 = Clock::now();
  int good = 0;
  std::string bad;
  bool north_first = false;
  const auto rows = testdata::table1();
  for (const auto& s : rows) {
    const auto setup = dsl::compile(s.setup);
    const std::size_t first = setup.parsed.program.statements.size();
    const auto c = dsl::compile(s.setup + (s.setup.empty() ? "" : "\n") + s.snippet);
    const auto r = c.ok() ? kernel::execute(c.parsed.program) : kernel::ExecResult{};
    if (!c.ok() || !r.ok()) {
      bad += " " + s.name;
      continue;
    }
    int match = 0, other = 0;
    for (const auto& e : r.document.log) {
      if (e.statement < first) continue;
      (e.entity == s.entity ? match : other) += 1;
    }
    if (match == s.count && other == 0) ++good;
    else bad += " " + s.name;

    if (s.name == "module-split") {
      // hang a hole on piece 0 and see which half hosts it
      const std::string probe = s.setup + "\n" + s.snippet +
                                "\nUtils.CreateHole(module: module_2_north, direction: \"east\", alignment: \"none\", "
                                "offset: 0, dimension: 600);";
      const auto pr = kernel::execute(dsl::compile(probe).parsed.program);
      if (pr.ok() && pr.document.holes.size() == 1) {
        const auto* host = pr.document.module(pr.document.holes[0].host);
        const auto& parent = pr.document.modules.front().rect;
        north_first = host && host->rect.min.y > parent.min.y && host->rect.max.y == parent.max.y;
      }
    }
  }
  const double dt = seconds_since(t0);
  return {good == 12 && rows.size() == 12 && north_first && dt < 1.0,
          fmt("%d/%zu categories right, split piece 0 north: %s, %.3f s", good, rows.size(), north_first ? "yes" : "no",
              dt) +
              (bad.empty() ? "" : ", wrong:" + bad)};
}

// 3: rectangle IoU against rasterization and the shift law
Outcome rect_iou() {
  std::mt19937_64 rng(20261018);
  // fractional coordinates, so pixel counting only approximates the areas
  std::uniform_real_distribution<double> ext(100, 8000), pos(-4000, 4000);
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    const double ax = pos(rng), ay = pos(rng), bx = ax + pos(rng) / 2, by = ay + pos(rng) / 2;
    const geom::Rect a{{ax, ay}, {ax + ext(rng), ay + ext(rng)}};
    const geom::Rect b{{bx, by}, {bx + ext(rng), by + ext(rng)}};
    worst = std::max(worst, std::abs(geom::rect_iou(a, b) - oracle::raster_iou(a, b)));
  }
  double worst_shift = 0;
  for (int k = 0; k < 50; ++k) {
    const double s = ext(rng), h = ext(rng);
    const double d = std::uniform_real_distribution<double>(0.0, s)(rng);
    // same rectangle moved by d along x (odd k) or y (even k)
    const geom::Rect a = k % 2 ? geom::Rect{{0, 0}, {s, h}} : geom::Rect{{0, 0}, {h, s}};
    const geom::Rect b = k % 2 ? geom::Rect{{d, 0}, {s + d, h}} : geom::Rect{{0, d}, {h, s + d}};
    worst_shift = std::max(worst_shift, std::abs(geom::rect_iou(a, b) - (s - d) / (s + d)));
  }
  return {worst <= 2e-3 && worst_shift <= 1e-9,
          fmt("max |IoU - raster| %.2e over 100 pairs, max shift-law error %.2e over 50", worst, worst_shift)};
}

double excess_by_parts(const std::vector<geom::Rect>& inner, const std::vector<geom::Rect>& outer) {
  double inside = 0, total = 0;
  for (const auto& r : inner) {
    total += r.area();
    for (const auto& o : outer) inside += geom::overlap_area(r, o);
  }
  return total - inside;
}

// 4: synthesized layouts stay inside their units and clear of each other
Outcome synth_validity() {
  int containment = 0, overlaps = 0, failed = 0;
  for (const auto& p : synthetic_programs(1000, 4)) {
    const auto r = kernel::execute(p);
    if (!r.ok()) {
      ++failed;
      continue;
    }
    const auto& d = r.document;
    for (const auto& room : d.rooms) {
      const auto* u = d.unit(room.unit);
      if (!u || excess_by_parts(room.region.parts(), u->region.parts()) > 1.0) ++containment;
    }
    for (const auto& u : d.units) {
      std::vector<geom::Rect> mods;
      for (int id : u.modules) {
        for (const auto& q : d.module(id)->region.parts()) mods.push_back(q);
      }
      if (excess_by_parts(u.region.parts(), mods) > 1.0) ++containment;
    }
    for (std::size_t i = 0; i < d.rooms.size(); ++i) {
      for (std::size_t j = i + 1; j < d.rooms.size(); ++j) {
        double ov = 0;
        for (const auto& a : d.rooms[i].region.parts()) {
          for (const auto& b : d.rooms[j].region.parts()) ov += geom::overlap_area(a, b);
        }
        if (ov > 1.0) ++overlaps;
      }
    }
  }
  return {containment == 0 && overlaps == 0 && failed == 0,
          fmt("1000 programs: %d containment failures, %d room overlaps, %d failed to run", containment, overlaps,
              failed)};
}

// 5: text, JSON and coordinate round trips
Outcome round_trips() {
  std::vector<std::string> sources;
  for (const auto& [id, src] : testdata::golds()) sources.push_back(src);
  for (const auto& p : synthetic_programs(1000, 5)) sources.push_back(dsl::canonicalize(p));
  int canon = 0, twins = 0, json_stable = 0, fixed = 0;
  for (const auto& src : sources) {
    const auto a = dsl::parse_program(src);
    const auto text = dsl::canonicalize(a.program);
    const auto b = dsl::parse_program(text);
    if (b.ok() && dsl::structurally_equal(a.program, b.program) && dsl::canonicalize(b.program) == text) ++canon;
    const auto twin = dsl::parse_program(dsl::to_positional(a.program));
    if (twin.ok() && dsl::canonicalize(twin.program) == text) ++twins;
    const auto r = kernel::execute(a.program);
    if (!r.ok()) continue;
    const auto j = harness::export_layout_json(r.document);
    if (harness::export_layout_json(harness::import_layout_json(j)) == j &&
        harness::export_layout_json(kernel::execute(b.program).document) == j) {
      ++json_stable;
    }
    const auto seq = synth::to_coordinate_seq(r.document);
    if (synth::to_coordinate_seq(synth::parse_coordinate_seq(seq)) == seq) ++fixed;
  }
  const auto lit = kernel::execute(
      dsl::compile("Module m = new Module(name: \"Module 1\", point: initial_point, length: 3100, width: 5420);")
          .parsed.program);
  const bool literal = synth::to_coordinate_seq(lit.document).find("[Module 1|x=0|y=0|length=3100.0|width=5420.0]") !=
                       std::string::npos;
  const int n = static_cast<int>(sources.size());
  return {canon == n && twins == n && json_stable == n && fixed == n && literal,
          fmt("%d programs: canon %d, twins %d, JSON %d, coordinates %d; literal module line %s", n, canon, twins,
              json_stable, fixed, literal ? "exact" : "differs")};
}

// 6: repair of corrupted programs
Outcome repair() {
  std::map<std::string, int> by_type;
  int ok = 0, unrepairable = 0;
  std::string bad;
  const auto rows = testdata::corrupted();
  for (const auto& c : rows) {
    ++by_type[c.type];
    const auto r = dsl::repair_source(c.source);
    bool good = !r.error_trajectory.empty();
    for (std::size_t k = 1; k < r.error_trajectory.size(); ++k) good = good && r.error_trajectory[k] < r.error_trajectory[k - 1];
    if (r.unrepairable) {
      ++unrepairable;
    } else {
      good = good && r.error_trajectory.back() == 0 && dsl::compile(dsl::canonicalize(r.program)).ok();
    }
    if (good) ++ok;
    else bad += " " + c.file;
  }
  std::string types;
  for (const auto& [t, n] : by_type) types += fmt(" %s=%d", t.c_str(), n);
  return {rows.size() == 50 && by_type.size() == 5 && ok == 50,
          fmt("%d/%zu resolved (%d unrepairable), types:", ok, rows.size(), unrepairable) + types +
              (bad.empty() ? "" : ", failed:" + bad)};
}

// 7: F1 and IoU penalty against hand counts and enumeration
Outcome metric_oracles() {
  const auto gold = metrics::instances(dsl::parse_program(testdata::f1_gold()).program);
  int f1_ok = 0;
  const auto cases = testdata::f1_cases();
  for (const auto& c : cases) {
    const auto got = metrics::instance_f1(metrics::instances(dsl::parse_program(c.pred).program), gold).f1;
    if (std::abs(got - c.instance_f1) < 1e-12) ++f1_ok;
  }
  std::mt19937_64 rng(77);
  const char* labels[] = {"bedroom", "kitchen", "bathroom"};
  int iou_ok = 0;
  for (int t = 0; t < 10; ++t) {
    std::vector<metrics::Box> p, g;
    std::vector<oracle::LabeledRect> op, og;
    auto draw = [&](std::vector<metrics::Box>& out, std::vector<oracle::LabeledRect>& o, int n) {
      for (int k = 0; k < n; ++k) {
        const double x = static_cast<double>(rng() % 30) * 100, y = static_cast<double>(rng() % 30) * 100;
        const geom::Rect r{{x, y}, {x + 800 + static_cast<double>(rng() % 25) * 100, y + 800 + static_cast<double>(rng() % 25) * 100}};
        const std::string l = labels[rng() % 3];
        out.push_back({l, geom::Region(r)});
        o.push_back({l, {r}});
      }
    };
    draw(p, op, 1 + t % 4);
    draw(g, og, 1 + (t * 3 + 2) % 5);
    if (std::abs(*metrics::category_iou(p, g) - oracle::enumerated_category_iou(op, og)) < 1e-12) ++iou_ok;
  }
  return {f1_ok == 10 && cases.size() == 10 && iou_ok == 10,
          fmt("F1 %d/%zu hand pairs (3 of 4 -> %.3f), IoU penalty %d/10 enumerations", f1_ok, cases.size(),
              6.0 / 7.0, iou_ok)};
}

int sh(const std::string& cmd) { return std::system(cmd.c_str()); }

std::string csv_field(const std::string& csv, const std::string& column) {
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  std::istringstream h(header), r(row);
  std::string hc, rc;
  while (std::getline(h, hc, ',') && std::getline(r, rc, ',')) {
    if (hc == column) return rc;
  }
  return "";
}

// 8: command-line synthesis and batch evaluation
Outcome cli_scale(const std::string& mbl) {
  const auto dir = fs::temp_directory_path() / ("mbl_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto a = (dir / "a.jsonl").string(), b = (dir / "b.jsonl").string(), small = (dir / "small.jsonl").string();
  auto t0 = Clock::now();
  const int rc1 = sh(mbl + " synth -n 3000 --seed 8 -o " + a);
  const double synth_s = seconds_since(t0);
  const int rc2 = sh(mbl + " synth -n 3000 --seed 8 -o " + b);
  const bool same = rc1 == 0 && rc2 == 0 && harness::read_file(a) == harness::read_file(b);
  const int rc3 = sh(mbl + " eval --pred " + a + " --gold " + a + " -o " + (dir / "self").string() + " > /dev/null");
  const auto self_pass = rc3 == 0 ? csv_field(harness::read_file(dir / "self" / "aggregate.csv"), "pass_rate") : "";
  const int rc4 = sh(mbl + " synth -n 1000 --seed 9 -o " + small);
  t0 = Clock::now();
  const int rc5 = sh(mbl + " eval --pred " + small + " --gold " + small + " -o " + (dir / "batch").string() + " > /dev/null");
  const double eval_s = seconds_since(t0);
  std::size_t lines = 0;
  if (rc5 == 0) {
    std::ifstream in(dir / "batch" / "report.jsonl");
    for (std::string l; std::getline(in, l);) ++lines;
  }
  fs::remove_all(dir);
  return {rc1 == 0 && synth_s < 60 && same && self_pass == "1.0000" && rc4 == 0 && rc5 == 0 && lines == 1000 && eval_s < 30,
          fmt("synth 3000 in %.1f s, rerun identical: %s, self-pass %s, eval of %zu records in %.1f s", synth_s,
              same ? "yes" : "no", self_pass.empty() ? "?" : self_pass.c_str(), lines, eval_s)};
}

// 9: topology against 1 mm sampling
Outcome topology_sampling() {
  int clean = 0;
  std::string first;
  const auto progs = synthetic_programs(20, 9);
  for (std::size_t k = 0; k < progs.size(); ++k) {
    const auto r = kernel::execute(progs[k]);
    if (!r.ok()) continue;
    const auto d = oracle::topology_disagreements(r.document, 2.0);
    if (d.empty()) ++clean;
    else if (first.empty()) first = fmt("layout %zu: ", k) + d.front();
  }
  return {clean == 20, fmt("%d/20 layouts agree on adjacency length (2 mm) and connectivity", clean) +
                           (first.empty() ? "" : ", " + first)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: mbl_acceptance <path to mbl>\n";
    return 2;
  }
  const std::string mbl = argv[1];
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"self-evaluation of golds", self_eval},
      {"snippet entity categories", snippets},
      {"rectangle IoU", rect_iou},
      {"synthesized layout validity", synth_validity},
      {"round trips", round_trips},
      {"repair of corrupted programs", repair},
      {"metric oracles", metric_oracles},
      {"CLI synthesis and batch evaluation", [&] { return cli_scale(mbl); }},
      {"topology sampling", topology_sampling},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
