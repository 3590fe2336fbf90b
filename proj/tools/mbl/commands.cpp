// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <cstdlib>
#include <iostream>

#include <json.hpp>

#include "mbl/dsl/canonical.hpp"
#include "mbl/dsl/check.hpp"
#include "mbl/dsl/repair.hpp"
#include "mbl/harness/io.hpp"
#include "mbl/harness/jsonl.hpp"
#include "mbl/harness/layout_json.hpp"
#include "mbl/harness/model_client.hpp"
#include "mbl/harness/svg.hpp"
#include "mbl/harness/synth_config.hpp"
#include "mbl/kernel/execute.hpp"
#include "mbl/metrics/metrics.hpp"
#include "mbl/synth/coordinate.hpp"
#include "mbl/topology/relations.hpp"

namespace mbl::cli {

namespace {

void emit(const std::string& target, const std::string& content) {
  if (target == "-") {
    std::cout << content;
    std::cout.flush();
  } else {
    harness::write_file_atomic(target, content);
  }
}

void print_diagnostics(const std::string& file, const std::vector<dsl::Diagnostic>& diags) {
  for (const auto& d : diags) std::cerr << file << ":" << dsl::format_diagnostic(d) << "\n";
}

bool looks_like_json(const std::string& text) {
  const auto at = text.find_first_not_of(" \t\r\n");
  return at != std::string::npos && text[at] == '{';
}

// Compiles, optionally repairing first. Returns nullopt after reporting errors.
std::optional<dsl::Program> compile_program(const std::string& file, const std::string& source, bool repair) {
  auto c = dsl::compile(source);
  if (c.ok()) return std::move(c.parsed.program);
  if (!repair) {
    print_diagnostics(file, c.diagnostics);
    return std::nullopt;
  }
  auto r = dsl::repair_source(source);
  for (const auto& line : r.log) std::cerr << "repair: " << line << "\n";
  if (r.unrepairable) {
    std::cerr << file << ": unrepairable: " << r.reason << "\n";
    return std::nullopt;
  }
  // the repaired text goes through the normal front end once more
  auto again = dsl::compile(dsl::canonicalize(r.program));
  if (!again.ok()) {
    print_diagnostics(file, again.diagnostics);
    return std::nullopt;
  }
  return std::move(again.parsed.program);
}

}  // namespace

int run(const RunArgs& a) {
  try {
    const auto source = harness::read_file(a.input);
    const auto program = compile_program(a.input, source, a.repair);
    if (!program) return kCompileError;
    if (a.repair) std::cerr << "repaired program:\n" << dsl::canonicalize(*program);
    const auto result = kernel::execute(*program);
    if (!result.ok()) {
      std::cerr << a.input << ": " << kernel::format_exec_error(*result.error) << "\n";
      return kExecError;
    }
    std::optional<topology::TopologyReport> topo;
    if (a.topology) topo = topology::analyze(result.document);
    emit(a.json_out, harness::export_layout_json(result.document, topo ? &*topo : nullptr));
    if (!a.svg_out.empty()) emit(a.svg_out, harness::render_svg(result.document));
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "mbl run: " << e.what() << "\n";
    return kUsageError;
  }
}

int eval(const EvalArgs& a) {
  try {
    const auto gold_texts = harness::load_texts(a.gold, {"gold", "code_named", "code", "code_positional"});
    const std::vector<std::string> pred_fields =
        a.coordinate ? std::vector<std::string>{"prediction", "coordinate_seq"}
                     : std::vector<std::string>{"prediction", "code", "code_named", "code_positional"};
    const auto preds = harness::load_texts(a.pred, pred_fields);

    std::vector<metrics::GoldRecord> golds;
    golds.reserve(gold_texts.size());
    for (const auto& [id, src] : gold_texts) {
      golds.push_back(metrics::prepare_gold(id, src));
      if (!golds.back().executed) std::cerr << "warning: gold " << id << " does not execute\n";
    }
    metrics::BatchOptions opts;
    opts.eval.eps = a.eps;
    opts.eval.coordinate_output = a.coordinate;
    opts.module_threshold = a.module_threshold;
    opts.unit_threshold = a.unit_threshold;
    opts.room_threshold = a.room_threshold;
    opts.group_by = a.group_by;
    const auto report =
        metrics::batch_evaluate(golds, preds, opts, a.coordinate ? &synth::parse_coordinate_boxes : nullptr);
    for (const auto& id : report.missing) std::cerr << "missing prediction: " << id << "\n";

    std::string lines;
    for (const auto& r : report.records) lines += harness::to_jsonl(r, a.coordinate) + "\n";
    const auto md = metrics::aggregate_markdown(report);
    if (!a.out_dir.empty()) {
      std::filesystem::create_directories(a.out_dir);
      const std::filesystem::path dir(a.out_dir);
      harness::write_file_atomic(dir / "report.jsonl", lines);
      harness::write_file_atomic(dir / "aggregate.csv", metrics::aggregate_csv(report));
      harness::write_file_atomic(dir / "aggregate.md", md);
    }
    std::cout << md;
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "mbl eval: " << e.what() << "\n";
    return kUsageError;
  }
}

int synth(const SynthArgs& a) {
  try {
    harness::SynthSettings s;
    if (!a.config.empty()) s = harness::synth_settings_from_json(harness::read_file(a.config));
    if (a.seed) s.dataset.seed = *a.seed;
    if (a.shuffle) s.dataset.describe.shuffle = true;
    std::vector<synth::DatasetRecord> records;
    if (!a.from.empty()) {
      s.dataset.descriptions_per_design = a.descriptions;
      const auto texts = harness::load_texts(a.from, {"gold", "code_named", "code"});
      records = synth::build_partial({texts.begin(), texts.end()}, s.dataset);
    } else {
      records = synth::build_full(a.n, s.dataset, s.grammar);
    }
    if (!a.skeleton) {
      for (auto& r : records) r.skeleton.clear();
    }
    emit(a.out, harness::dataset_jsonl(records));
    return kOk;
  } catch (const synth::GenerationExhausted& e) {
    std::cerr << "mbl synth: generation exhausted: " << e.what() << "\n";
    return kExecError;
  } catch (const std::exception& e) {
    std::cerr << "mbl synth: " << e.what() << "\n";
    return kUsageError;
  }
}

int render(const RenderArgs& a) {
  try {
    const auto text = harness::read_file(a.input);
    kernel::LayoutDocument doc;
    if (looks_like_json(text)) {
      doc = harness::import_layout_json(text);
    } else {
      const auto program = compile_program(a.input, text, false);
      if (!program) return kCompileError;
      auto result = kernel::execute(*program);
      if (!result.ok()) {
        std::cerr << a.input << ": " << kernel::format_exec_error(*result.error) << "\n";
        return kExecError;
      }
      doc = std::move(result.document);
    }
    harness::SvgOptions opts;
    opts.labels = !a.no_labels;
    emit(a.svg_out, harness::render_svg(doc, opts));
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "mbl render: " << e.what() << "\n";
    return kUsageError;
  }
}

int gen(const GenArgs& a) {
  using json = nlohmann::ordered_json;
  try {
    std::vector<std::pair<std::string, std::string>> jobs;
    if (!a.input.empty()) {
      for (const auto& r : harness::read_dataset_jsonl(harness::read_file(a.input))) jobs.emplace_back(r.id, r.description);
    } else if (!a.description.empty()) {
      jobs.emplace_back("", a.description);
    } else {
      std::cerr << "mbl gen: give --description or --input\n";
      return kUsageError;
    }

    std::optional<harness::ReplayClient> replay;
    harness::ModelEndpointConfig endpoint;
    if (!a.fixture.empty()) {
      replay = harness::ReplayClient::from_jsonl(harness::read_file(a.fixture));
    } else if (!a.endpoint.empty()) {
      const char* live = std::getenv(std::string(harness::kLiveModeEnv).c_str());
      if (!live || std::string(live) != "1") {
        std::cerr << "mbl gen: live mode is off; set " << harness::kLiveModeEnv << "=1 or use --fixture\n";
        return kUsageError;
      }
      endpoint = harness::endpoint_from_json(harness::read_file(a.endpoint));
      if (a.temperature) endpoint.temperature = *a.temperature;
      endpoint.validate();
    } else {
      std::cerr << "mbl gen: give --fixture or --endpoint\n";
      return kUsageError;
    }
    const auto tmpl = a.prompt.empty() ? harness::default_prompt_template() : harness::read_file(a.prompt);

    // everything is generated before anything is written
    std::string out;
    for (const auto& [id, description] : jobs) {
      const auto code = replay ? replay->generate(description)
                               : harness::generate_live(endpoint, harness::build_prompt(tmpl, description));
      if (a.input.empty()) {
        out = code;
        if (!out.empty() && out.back() != '\n') out += '\n';
      } else {
        json j;
        j["id"] = id;
        j["prediction"] = code;
        out += j.dump() + "\n";
      }
    }
    emit(a.out, out);
    return kOk;
  } catch (const harness::TransportError& e) {
    std::cerr << "mbl gen: " << e.what();
    if (e.retry_after) std::cerr << " (retry after " << *e.retry_after << " s)";
    std::cerr << "\n";
    return kTransportError;
  } catch (const std::exception& e) {
    std::cerr << "mbl gen: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace mbl::cli
