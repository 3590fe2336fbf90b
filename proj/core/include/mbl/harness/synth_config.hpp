// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "mbl/synth/dataset.hpp"
#include "mbl/synth/grammar.hpp"

namespace mbl::harness {

struct SynthSettings {
  synth::CodeGrammar grammar;
  synth::DatasetConfig dataset;
};

/// JSON object; every key is optional and unknown keys are rejected.
///   {"seed", "shuffle", "module_count_weights", "unit_count_weights",
///    "element_count_weights", "split_probability", "merge_probability",
///    "directional_unit_probability", "module_min", "module_max", "room_min",
///    "room_max", "step", "room_types", "max_attempts"}
/// Throws std::invalid_argument on bad input.
SynthSettings synth_settings_from_json(std::string_view text);

}  // namespace mbl::harness
