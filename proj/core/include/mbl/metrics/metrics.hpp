// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbl/dsl/ast.hpp"
#include "mbl/dsl/check.hpp"
#include "mbl/geom/region.hpp"
#include "mbl/kernel/document.hpp"

namespace mbl::metrics {

/// A design action reduced to comparable form: op kind plus normalized
/// argument values, references replaced by the label of the entity named.
struct CanonicalInstance {
  std::string op;
  std::map<std::string, std::string> args;

  friend bool operator==(const CanonicalInstance&, const CanonicalInstance&) = default;
  friend auto operator<=>(const CanonicalInstance&, const CanonicalInstance&) = default;
};

std::vector<CanonicalInstance> instances(const dsl::Program& p);

/// Component family of an instance: "modules", "units", "rooms", "elements".
std::string_view component_of(std::string_view op);

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // raw counts behind the ratios
  double matched = 0.0;
  double predicted = 0.0;
  double gold = 0.0;
};

PRF make_prf(double matched, double predicted, double gold);

PRF instance_f1(const std::vector<CanonicalInstance>& pred, const std::vector<CanonicalInstance>& gold);
PRF argument_f1(const std::vector<CanonicalInstance>& pred, const std::vector<CanonicalInstance>& gold);

/// Geometry of the three spatial categories, as compared by IoU.
struct Box {
  std::string label;  // semantic label; rooms only match rooms of the same one
  geom::Region region;
};

struct LayoutBoxes {
  std::vector<Box> modules;
  std::vector<Box> units;
  std::vector<Box> rooms;
};

LayoutBoxes boxes_of(const kernel::LayoutDocument& doc);

struct IoU {
  double overall = 0.0;
  double module = 0.0;
  double unit = 0.0;
  double room = 0.0;
};

double region_iou(const geom::Region& a, const geom::Region& b);

/// Optimal one-to-one matching; matched IoU sum over max(n_pred, n_gold).
/// Returns nullopt when both sides are empty.
std::optional<double> category_iou(const std::vector<Box>& pred, const std::vector<Box>& gold);

IoU layout_iou(const LayoutBoxes& pred, const LayoutBoxes& gold);

struct CompileCheck {
  bool ok = false;
  std::vector<dsl::Diagnostic> diagnostics;
};

CompileCheck check_compile(std::string_view source);

/// Layout equivalence: same entities per category and label, geometry
/// within `eps` mm per coordinate, doors and holes on the same host side.
bool documents_match(const kernel::LayoutDocument& pred, const kernel::LayoutDocument& gold, double eps = 1.0);
bool check_pass(std::string_view pred_source, std::string_view gold_source, double eps = 1.0);

struct EvalReport {
  std::string id;
  bool compiled = false;
  bool executed = false;
  bool passed = false;
  bool missing = false;
  PRF instance;
  PRF argument;
  IoU iou;
  std::map<std::string, PRF> instance_by_component;
  std::map<std::string, PRF> argument_by_component;
};

struct EvalOptions {
  double eps = 1.0;
  /// Predictions in the coordinate format: IoU only.
  bool coordinate_output = false;
};

/// Parsed gold with its executed layout, reusable across predictions.
struct GoldRecord {
  std::string id;
  std::string source;
  dsl::Program program;
  std::vector<CanonicalInstance> instances;
  kernel::LayoutDocument document;
  bool executed = false;
  int modules = 0;  // live modules in the gold layout
  int units = 0;
  int rooms = 0;
};

GoldRecord prepare_gold(std::string id, std::string source);

/// Parses the prediction (code, or coordinate text when so configured).
using CoordinateParser = std::optional<LayoutBoxes> (*)(std::string_view);

EvalReport evaluate(const GoldRecord& gold, const std::optional<std::string>& prediction, const EvalOptions& opts = {},
                    CoordinateParser parse_coordinates = nullptr);

struct Aggregate {
  std::size_t records = 0;
  double compile_rate = 0.0;
  double pass_rate = 0.0;
  double instance_f1 = 0.0;
  double argument_f1 = 0.0;
  double iou_overall = 0.0;
  double iou_module = 0.0;
  double iou_unit = 0.0;
  double iou_room = 0.0;
  std::map<std::string, double> instance_f1_by_component;
  std::map<std::string, double> argument_f1_by_component;
};

Aggregate aggregate(const std::vector<EvalReport>& reports);

struct BatchReport {
  std::vector<EvalReport> records;
  Aggregate overall;
  /// Cohorts by gold component count, e.g. "modules<=2" and "modules>2".
  std::map<std::string, Aggregate> cohorts;
  std::vector<std::string> missing;  // ids without a prediction
  bool coordinate_output = false;    // only the IoU columns mean anything
};

struct BatchOptions {
  EvalOptions eval;
  int module_threshold = 2;
  int unit_threshold = 1;
  int room_threshold = 4;
  std::vector<std::string> group_by{"modules", "units"};  // any of modules, units, rooms
};

BatchReport batch_evaluate(const std::vector<GoldRecord>& golds, const std::map<std::string, std::string>& predictions,
                           const BatchOptions& opts = {}, CoordinateParser parse_coordinates = nullptr);

/// Aggregate table as CSV (one row per cohort, "all" first) or Markdown.
std::string aggregate_csv(const BatchReport& r);
std::string aggregate_markdown(const BatchReport& r);

}  // namespace mbl::metrics
