// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/harness/jsonl.hpp"

#include <json.hpp>

#include "mbl/harness/io.hpp"

namespace mbl::harness {

namespace {

using json = nlohmann::ordered_json;

json prf(const metrics::PRF& p) {
  json j;
  j["precision"] = p.precision;
  j["recall"] = p.recall;
  j["f1"] = p.f1;
  return j;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) out.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

}  // namespace

std::string to_jsonl(const synth::DatasetRecord& r) {
  json j;
  j["schema_version"] = kDatasetSchemaVersion;
  j["id"] = r.id;
  j["description"] = r.description;
  if (!r.skeleton.empty()) j["skeleton"] = r.skeleton;
  j["code_named"] = r.code_named;
  j["code_positional"] = r.code_positional;
  j["coordinate_seq"] = r.coordinate_seq;
  j["provenance"] = r.provenance;
  json s;
  s["tokens"] = r.stats.tokens;
  s["sentences"] = r.stats.sentences;
  s["modules"] = r.stats.modules;
  s["units"] = r.stats.units;
  s["rooms"] = r.stats.rooms;
  s["elements"] = r.stats.elements;
  j["stats"] = std::move(s);
  return j.dump();
}

synth::DatasetRecord dataset_record_from_json(std::string_view line) {
  const auto j = json::parse(line);
  synth::DatasetRecord r;
  r.id = j.at("id").get<std::string>();
  r.description = j.value("description", "");
  r.skeleton = j.value("skeleton", "");
  r.code_named = j.value("code_named", "");
  r.code_positional = j.value("code_positional", "");
  r.coordinate_seq = j.value("coordinate_seq", "");
  r.provenance = j.value("provenance", "");
  if (j.contains("stats")) {
    const auto& s = j.at("stats");
    r.stats.tokens = s.value("tokens", 0);
    r.stats.sentences = s.value("sentences", 0);
    r.stats.modules = s.value("modules", 0);
    r.stats.units = s.value("units", 0);
    r.stats.rooms = s.value("rooms", 0);
    r.stats.elements = s.value("elements", 0);
  }
  return r;
}

std::string to_jsonl(const metrics::EvalReport& r, bool coordinate_output) {
  json j;
  j["id"] = r.id;
  j["missing"] = r.missing;
  if (!coordinate_output) {
    j["compiled"] = r.compiled;
    j["executed"] = r.executed;
    j["passed"] = r.passed;
    j["instance"] = prf(r.instance);
    j["argument"] = prf(r.argument);
  }
  json iou;
  iou["overall"] = r.iou.overall;
  iou["module"] = r.iou.module;
  iou["unit"] = r.iou.unit;
  iou["room"] = r.iou.room;
  j["iou"] = std::move(iou);
  if (!coordinate_output) {
    json comp = json::object();
    for (const auto& [k, v] : r.instance_by_component) {
      comp[k]["instance_f1"] = v.f1;
      const auto it = r.argument_by_component.find(k);
      comp[k]["argument_f1"] = it == r.argument_by_component.end() ? 0.0 : it->second.f1;
    }
    j["components"] = std::move(comp);
  }
  return j.dump();
}

std::string dataset_jsonl(const std::vector<synth::DatasetRecord>& records) {
  std::string out;
  for (const auto& r : records) out += to_jsonl(r) + "\n";
  return out;
}

std::vector<synth::DatasetRecord> read_dataset_jsonl(std::string_view text) {
  std::vector<synth::DatasetRecord> out;
  for (const auto line : lines_of(text)) out.push_back(dataset_record_from_json(line));
  return out;
}

std::map<std::string, std::string> load_texts(const std::filesystem::path& path,
                                              const std::vector<std::string>& fields) {
  namespace fs = std::filesystem;
  std::map<std::string, std::string> out;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) out[entry.path().stem().string()] = read_file(entry.path());
    }
    return out;
  }
  const auto text = read_file(path);
  std::size_t n = 0;
  for (const auto line : lines_of(text)) {
    ++n;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw IoError(path.string() + ":" + std::to_string(n) + ": " + e.what());
    }
    if (!j.contains("id")) throw IoError(path.string() + ":" + std::to_string(n) + ": record without id");
    const auto id = j.at("id").is_string() ? j.at("id").get<std::string>() : j.at("id").dump();
    for (const auto& f : fields) {
      if (j.contains(f) && j.at(f).is_string()) {
        out[id] = j.at(f).get<std::string>();
        break;
      }
    }
  }
  return out;
}

}  // namespace mbl::harness
