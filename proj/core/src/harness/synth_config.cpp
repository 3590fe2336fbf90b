// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/harness/synth_config.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "mbl/dsl/signatures.hpp"

namespace mbl::harness {

SynthSettings synth_settings_from_json(std::string_view text) {
  using json = nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("synth config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("synth config must be a JSON object");
  SynthSettings s;
  auto& g = s.grammar;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "seed") s.dataset.seed = v.get<std::uint64_t>();
      else if (key == "shuffle") s.dataset.describe.shuffle = v.get<bool>();
      else if (key == "module_count_weights") g.module_count_weights = v.get<std::vector<double>>();
      else if (key == "unit_count_weights") g.unit_count_weights = v.get<std::vector<double>>();
      else if (key == "element_count_weights") g.element_count_weights = v.get<std::vector<double>>();
      else if (key == "split_probability") g.split_probability = v.get<double>();
      else if (key == "merge_probability") g.merge_probability = v.get<double>();
      else if (key == "directional_unit_probability") g.directional_unit_probability = v.get<double>();
      else if (key == "module_min") g.module_min = v.get<double>();
      else if (key == "module_max") g.module_max = v.get<double>();
      else if (key == "room_min") g.room_min = v.get<double>();
      else if (key == "room_max") g.room_max = v.get<double>();
      else if (key == "step") g.step = v.get<double>();
      else if (key == "room_types") g.room_types = v.get<std::vector<std::string>>();
      else if (key == "max_attempts") g.max_attempts = v.get<int>();
      else throw std::invalid_argument("synth config: unknown key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("synth config: ") + e.what());
  }
  if (!(g.module_min > 0 && g.module_min <= g.module_max)) throw std::invalid_argument("synth config: module range");
  if (!(g.room_min > 0 && g.room_min <= g.room_max)) throw std::invalid_argument("synth config: room range");
  if (!(g.step > 0)) throw std::invalid_argument("synth config: step must be positive");
  if (g.max_attempts <= 0) throw std::invalid_argument("synth config: max_attempts must be positive");
  for (double p : {g.split_probability, g.merge_probability, g.directional_unit_probability}) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("synth config: probabilities must lie in [0, 1]");
  }
  if (g.room_types.empty()) throw std::invalid_argument("synth config: room_types is empty");
  // generated programs must pass the default checker
  const auto known = dsl::default_room_types();
  for (const auto& t : g.room_types) {
    if (std::find(known.begin(), known.end(), dsl::semantic_label(t)) == known.end()) {
      throw std::invalid_argument("synth config: unknown room type '" + t + "'");
    }
  }
  for (const auto* w : {&g.module_count_weights, &g.unit_count_weights, &g.element_count_weights}) {
    double total = 0;
    for (double x : *w) {
      if (x < 0) throw std::invalid_argument("synth config: negative weight");
      total += x;
    }
    if (total <= 0) throw std::invalid_argument("synth config: weights sum to zero");
  }
  return s;
}

}  // namespace mbl::harness
