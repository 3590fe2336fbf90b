// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace mbl::cli;
  CLI::App app{"mbl: modular building layout toolkit"};
  app.require_subcommand(1);

  RunArgs ra;
  auto* run_cmd = app.add_subcommand("run", "compile and execute a layout program");
  run_cmd->add_option("input", ra.input, "program file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--json", ra.json_out, "layout JSON output ('-' for stdout)");
  run_cmd->add_option("--svg", ra.svg_out, "write an SVG plan");
  run_cmd->add_flag("--repair", ra.repair, "repair compile errors before running");
  run_cmd->add_flag("--topology", ra.topology, "include adjacency and connectivity matrices");

  EvalArgs ea;
  auto* eval_cmd = app.add_subcommand("eval", "score predictions against gold programs");
  eval_cmd->add_option("--pred", ea.pred, "prediction JSONL or directory")->required()->check(CLI::ExistingPath);
  eval_cmd->add_option("--gold", ea.gold, "gold JSONL or directory")->required()->check(CLI::ExistingPath);
  eval_cmd->add_option("-o,--out-dir", ea.out_dir, "write report.jsonl, aggregate.csv and aggregate.md here");
  eval_cmd->add_flag("--coordinate", ea.coordinate, "predictions are coordinate sequences (IoU only)");
  eval_cmd->add_option("--group-by", ea.group_by, "cohorts by component count")
      ->delimiter(',')
      ->check(CLI::IsMember({"modules", "units", "rooms"}));
  eval_cmd->add_option("--module-threshold", ea.module_threshold);
  eval_cmd->add_option("--unit-threshold", ea.unit_threshold);
  eval_cmd->add_option("--room-threshold", ea.room_threshold);
  eval_cmd->add_option("--eps", ea.eps, "pass tolerance in mm")->check(CLI::PositiveNumber);

  SynthArgs sa;
  auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic dataset");
  synth_cmd->add_option("-n", sa.n, "number of records")->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--seed", sa.seed, "overrides the config seed");
  synth_cmd->add_option("--config", sa.config, "JSON grammar settings")->check(CLI::ExistingFile);
  synth_cmd->add_option("--from", sa.from, "describe these gold programs instead")->check(CLI::ExistingPath);
  synth_cmd->add_option("--descriptions", sa.descriptions, "descriptions per gold with --from")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_flag("--skeleton", sa.skeleton, "include the abstract instruction");
  synth_cmd->add_flag("--shuffle", sa.shuffle, "shuffle sentence order where dependencies allow");
  synth_cmd->add_option("-o,--out", sa.out, "dataset JSONL ('-' for stdout)");

  RenderArgs rda;
  auto* render_cmd = app.add_subcommand("render", "draw a program or layout JSON as SVG");
  render_cmd->add_option("input", rda.input, "program or layout JSON")->required()->check(CLI::ExistingFile);
  render_cmd->add_option("-o,--svg", rda.svg_out, "SVG output ('-' for stdout)");
  render_cmd->add_flag("--no-labels", rda.no_labels);

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("gen", "ask a model for layout code");
  auto* d = gen_cmd->add_option("--description", ga.description, "one description");
  auto* in = gen_cmd->add_option("--input", ga.input, "JSONL of id + description")->check(CLI::ExistingFile);
  d->excludes(in);
  auto* fx = gen_cmd->add_option("--fixture", ga.fixture, "replay recorded responses")->check(CLI::ExistingFile);
  auto* ep = gen_cmd->add_option("--endpoint", ga.endpoint, "endpoint JSON (live mode)")->check(CLI::ExistingFile);
  fx->excludes(ep);
  gen_cmd->add_option("--prompt", ga.prompt, "prompt template file")->check(CLI::ExistingFile);
  gen_cmd->add_option("--temperature", ga.temperature)->check(CLI::Range(0.0, 2.0));
  gen_cmd->add_option("-o,--out", ga.out, "prediction JSONL ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (*run_cmd) return run(ra);
  if (*eval_cmd) return eval(ea);
  if (*synth_cmd) return synth(sa);
  if (*render_cmd) return render(rda);
  if (*gen_cmd) return gen(ga);
  return kUsageError;
}
