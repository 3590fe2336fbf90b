// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/metrics/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "mbl/dsl/canonical.hpp"
#include "mbl/geom/ops.hpp"
#include "mbl/dsl/signatures.hpp"
#include "mbl/kernel/execute.hpp"
#include "mbl/metrics/assignment.hpp"

namespace mbl::metrics {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::string num(double v) { return dsl::format_number(std::round(v * 1e6) / 1e6); }

using Labels = std::map<std::string, std::string>;

std::string ref_text(const Labels& labels, const std::string& name) {
  const auto it = labels.find(name);
  return it == labels.end() ? "@?" + name : "@" + it->second;
}

std::string value_text(const dsl::ArgValue& v, const Labels& labels) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, dsl::Number>) {
          return num(x.value);
        } else if constexpr (std::is_same_v<T, dsl::Text>) {
          return lower(trim(x.value));
        } else if constexpr (std::is_same_v<T, dsl::Boolean>) {
          return x.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, dsl::PointValue>) {
          const auto p = x.resolve();
          return "(" + num(p.x) + "," + num(p.y) + ")";
        } else if constexpr (std::is_same_v<T, dsl::Ref>) {
          return ref_text(labels, x.name);
        } else if constexpr (std::is_same_v<T, dsl::RefList>) {
          std::string out = "[";
          for (std::size_t k = 0; k < x.names.size(); ++k) out += (k ? "," : "") + ref_text(labels, x.names[k]);
          return out + "]";
        } else {
          std::string out = "[";
          for (std::size_t k = 0; k < x.values.size(); ++k) out += (k ? "," : "") + num(x.values[k]);
          return out + "]";
        }
      },
      v);
}

const dsl::Text* text_arg(const dsl::ActionStatement& s, std::string_view name) {
  for (const auto& b : dsl::bind_arguments(s)) {
    if (b.name == name) return std::get_if<dsl::Text>(&b.arg->value);
  }
  return nullptr;
}

const dsl::ArgValue* arg(const dsl::ActionStatement& s, std::string_view name) {
  for (const auto& b : dsl::bind_arguments(s)) {
    if (b.name == name) return &b.arg->value;
  }
  return nullptr;
}

// Label each declared name would carry once executed.
void record_labels(const dsl::ActionStatement& s, Labels& labels) {
  if (!s.op) return;
  std::string label;
  switch (*s.op) {
    case dsl::OpKind::Split: {
      const auto* m = arg(s, "module");
      const auto* d = text_arg(s, "direction");
      const auto* r = m ? std::get_if<dsl::Ref>(m) : nullptr;
      std::string base = r && labels.count(r->name) ? labels.at(r->name) : "?";
      const bool we = d && lower(d->value) == "west-east";
      if (s.result) labels[s.result->name] = base + " pieces";
      for (const auto& p : s.pieces) {
        const char* suffix = p.index == 0 ? (we ? " north" : " west") : (we ? " south" : " east");
        labels[p.binding.name] = base + suffix;
      }
      return;
    }
    case dsl::OpKind::Merge: {
      const auto* m = arg(s, "modules");
      const auto* l = m ? std::get_if<dsl::RefList>(m) : nullptr;
      label = l && !l->names.empty() && labels.count(l->names.front()) ? labels.at(l->names.front()) : "merged";
      if (l) {
        for (const auto& n : l->names) labels[n] = label;
      }
      break;
    }
    default:
      if (const auto* t = text_arg(s, "name")) {
        label = lower(trim(t->value));
      } else {
        label = std::string(dsl::to_string(*s.op));
      }
  }
  if (s.result) labels[s.result->name] = label;
}

}  // namespace

std::vector<CanonicalInstance> instances(const dsl::Program& p) {
  std::vector<CanonicalInstance> out;
  Labels labels;
  for (const auto& s : p.statements) {
    CanonicalInstance inst;
    inst.op = s.op ? std::string(dsl::to_string(*s.op)) : lower(s.callee);
    const auto normalized = dsl::normalized_arguments(s);
    for (std::size_t k = 0; k < normalized.size(); ++k) {
      const auto& [name, value] = normalized[k];
      inst.args.emplace(name.empty() ? "#" + std::to_string(k) : name, value_text(value, labels));
    }
    if (s.signature >= 0) {
      for (const auto& prm : dsl::signature(s.signature).params) {
        if (prm.fallback && !inst.args.count(std::string(prm.name))) {
          inst.args.emplace(std::string(prm.name), value_text(*prm.fallback, labels));
        }
      }
    }
    out.push_back(std::move(inst));
    record_labels(s, labels);
  }
  return out;
}

std::string_view component_of(std::string_view op) {
  if (op == "module-absolute" || op == "module-relative" || op == "split" || op == "merge") return "modules";
  if (op.rfind("unit-", 0) == 0) return "units";
  if (op.rfind("room-", 0) == 0) return "rooms";
  return "elements";
}

PRF make_prf(double matched, double predicted, double gold) {
  PRF r;
  r.matched = matched;
  r.predicted = predicted;
  r.gold = gold;
  if (predicted == 0.0 && gold == 0.0) {
    r.precision = r.recall = r.f1 = 1.0;
    return r;
  }
  r.precision = predicted > 0.0 ? matched / predicted : 0.0;
  r.recall = gold > 0.0 ? matched / gold : 0.0;
  r.f1 = r.precision + r.recall > 0.0 ? 2.0 * r.precision * r.recall / (r.precision + r.recall) : 0.0;
  return r;
}

PRF instance_f1(const std::vector<CanonicalInstance>& pred, const std::vector<CanonicalInstance>& gold) {
  auto a = pred;
  auto b = gold;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<CanonicalInstance> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return make_prf(static_cast<double>(common.size()), static_cast<double>(pred.size()),
                  static_cast<double>(gold.size()));
}

PRF argument_f1(const std::vector<CanonicalInstance>& pred, const std::vector<CanonicalInstance>& gold) {
  double total_pred = 0.0, total_gold = 0.0, matched = 0.0;
  for (const auto& i : pred) total_pred += static_cast<double>(i.args.size());
  for (const auto& i : gold) total_gold += static_cast<double>(i.args.size());
  std::map<std::string, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> by_op;
  for (std::size_t k = 0; k < pred.size(); ++k) by_op[pred[k].op].first.push_back(k);
  for (std::size_t k = 0; k < gold.size(); ++k) by_op[gold[k].op].second.push_back(k);
  for (const auto& [op, idx] : by_op) {
    const auto& [pi, gi] = idx;
    if (pi.empty() || gi.empty()) continue;
    const double n = static_cast<double>(pi.size()), m = static_cast<double>(gi.size());
    // overlaps are integers; the tiny penalty prefers pairs close in creation order among ties
    const double bias = 0.5 / (n * (n + m) + 1.0);
    std::vector<std::vector<double>> overlap(pi.size(), std::vector<double>(gi.size()));
    std::vector<std::vector<double>> weight = overlap;
    for (std::size_t i = 0; i < pi.size(); ++i) {
      for (std::size_t j = 0; j < gi.size(); ++j) {
        double c = 0.0;
        for (const auto& [k, v] : pred[pi[i]].args) {
          const auto it = gold[gi[j]].args.find(k);
          if (it != gold[gi[j]].args.end() && it->second == v) c += 1.0;
        }
        overlap[i][j] = c;
        weight[i][j] = c - bias * std::abs(static_cast<double>(i) - static_cast<double>(j));
      }
    }
    const auto assign = max_weight_assignment(weight);
    for (std::size_t i = 0; i < assign.size(); ++i) {
      if (assign[i] >= 0) matched += overlap[i][static_cast<std::size_t>(assign[i])];
    }
  }
  return make_prf(matched, total_pred, total_gold);
}

LayoutBoxes boxes_of(const kernel::LayoutDocument& doc) {
  LayoutBoxes b;
  for (const auto* m : doc.live_modules()) b.modules.push_back({"module", m->region});
  for (const auto& u : doc.units) b.units.push_back({"unit", u.region});
  for (const auto& r : doc.rooms) b.rooms.push_back({dsl::semantic_label(r.label), r.region});
  return b;
}

double region_iou(const geom::Region& a, const geom::Region& b) {
  double inter = 0.0;
  for (const auto& p : a.parts()) {
    for (const auto& q : b.parts()) inter += geom::overlap_area(p, q);
  }
  const double uni = a.area() + b.area() - inter;
  if (inter <= 0.0 || uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

std::optional<double> category_iou(const std::vector<Box>& pred, const std::vector<Box>& gold) {
  if (pred.empty() && gold.empty()) return std::nullopt;
  if (pred.empty() || gold.empty()) return 0.0;
  std::vector<std::vector<double>> w(pred.size(), std::vector<double>(gold.size(), 0.0));
  for (std::size_t i = 0; i < pred.size(); ++i) {
    for (std::size_t j = 0; j < gold.size(); ++j) {
      if (pred[i].label == gold[j].label) w[i][j] = region_iou(pred[i].region, gold[j].region);
    }
  }
  const auto assign = max_weight_assignment(w);
  double sum = 0.0;
  for (std::size_t i = 0; i < assign.size(); ++i) {
    if (assign[i] >= 0) sum += w[i][static_cast<std::size_t>(assign[i])];
  }
  return sum / static_cast<double>(std::max(pred.size(), gold.size()));
}

IoU layout_iou(const LayoutBoxes& pred, const LayoutBoxes& gold) {
  IoU r;
  const auto m = category_iou(pred.modules, gold.modules);
  const auto u = category_iou(pred.units, gold.units);
  const auto o = category_iou(pred.rooms, gold.rooms);
  r.module = m.value_or(0.0);
  r.unit = u.value_or(0.0);
  r.room = o.value_or(0.0);
  double sum = 0.0;
  int n = 0;
  if (!gold.modules.empty()) sum += r.module, ++n;
  if (!gold.units.empty()) sum += r.unit, ++n;
  if (!gold.rooms.empty()) sum += r.room, ++n;
  if (n > 0) {
    r.overall = sum / n;
  } else {
    const bool empty = pred.modules.empty() && pred.units.empty() && pred.rooms.empty();
    r.overall = empty ? 1.0 : 0.0;
    if (empty) r.module = r.unit = r.room = 1.0;
  }
  return r;
}

CompileCheck check_compile(std::string_view source) {
  auto c = dsl::compile(source);
  return {c.ok(), std::move(c.diagnostics)};
}

namespace {

struct Item {
  std::string key;
  std::vector<double> coords;
};

std::vector<Item> items_of(const kernel::LayoutDocument& doc) {
  std::vector<Item> out;
  auto rect = [](const geom::Region& r) {
    const auto b = r.bounds();
    return std::vector<double>{b.min.x, b.min.y, b.max.x, b.max.y, std::sqrt(r.area())};
  };
  for (const auto* m : doc.live_modules()) out.push_back({"module", rect(m->region)});
  for (const auto& u : doc.units) out.push_back({"unit", rect(u.region)});
  for (const auto& r : doc.rooms) out.push_back({"room:" + dsl::semantic_label(r.label), rect(r.region)});
  for (const auto* list : {&doc.doors, &doc.holes}) {
    for (const auto& o : *list) {
      const std::string kind = o.kind == kernel::OpeningKind::Door ? "door" : "hole";
      out.push_back({kind + ":" + o.host_kind + ":" + std::string(kernel::to_string(o.side)),
                     {o.center.x, o.center.y, o.dimension}});
    }
  }
  return out;
}

}  // namespace

bool documents_match(const kernel::LayoutDocument& pred, const kernel::LayoutDocument& gold, double eps) {
  std::map<std::string, std::pair<std::vector<std::vector<double>>, std::vector<std::vector<double>>>> groups;
  for (auto& i : items_of(pred)) groups[i.key].first.push_back(std::move(i.coords));
  for (auto& i : items_of(gold)) groups[i.key].second.push_back(std::move(i.coords));
  for (const auto& [key, g] : groups) {
    const auto& [p, q] = g;
    if (p.size() != q.size()) return false;
    std::vector<std::vector<double>> cost(p.size(), std::vector<double>(q.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) {
        double d = 0.0;
        for (std::size_t k = 0; k < p[i].size(); ++k) d = std::max(d, std::abs(p[i][k] - q[j][k]));
        cost[i][j] = d;
      }
    }
    const auto assign = min_cost_assignment(cost);
    for (std::size_t i = 0; i < assign.size(); ++i) {
      if (assign[i] < 0 || cost[i][static_cast<std::size_t>(assign[i])] > eps) return false;
    }
  }
  return true;
}

bool check_pass(std::string_view pred_source, std::string_view gold_source, double eps) {
  const auto p = dsl::compile(pred_source);
  const auto g = dsl::compile(gold_source);
  if (!p.ok() || !g.ok()) return false;
  const auto pe = kernel::execute(p.parsed.program);
  const auto ge = kernel::execute(g.parsed.program);
  return pe.ok() && ge.ok() && documents_match(pe.document, ge.document, eps);
}

GoldRecord prepare_gold(std::string id, std::string source) {
  GoldRecord g;
  g.id = std::move(id);
  g.source = std::move(source);
  auto c = dsl::compile(g.source);
  g.program = std::move(c.parsed.program);
  g.instances = instances(g.program);
  if (c.ok()) {
    auto e = kernel::execute(g.program);
    g.executed = e.ok();
    g.document = std::move(e.document);
  }
  g.modules = static_cast<int>(g.document.live_modules().size());
  g.units = static_cast<int>(g.document.units.size());
  g.rooms = static_cast<int>(g.document.rooms.size());
  return g;
}

namespace {

std::map<std::string, PRF> by_component(const std::vector<CanonicalInstance>& pred,
                                        const std::vector<CanonicalInstance>& gold, bool arguments) {
  std::map<std::string, PRF> out;
  for (std::string_view c : {"modules", "units", "rooms", "elements"}) {
    std::vector<CanonicalInstance> p, g;
    for (const auto& i : pred) {
      if (component_of(i.op) == c) p.push_back(i);
    }
    for (const auto& i : gold) {
      if (component_of(i.op) == c) g.push_back(i);
    }
    if (p.empty() && g.empty()) continue;
    out[std::string(c)] = arguments ? argument_f1(p, g) : instance_f1(p, g);
  }
  return out;
}

}  // namespace

EvalReport evaluate(const GoldRecord& gold, const std::optional<std::string>& prediction, const EvalOptions& opts,
                    CoordinateParser parse_coordinates) {
  EvalReport r;
  r.id = gold.id;
  if (!prediction) {
    r.missing = true;
    return r;
  }
  if (opts.coordinate_output) {
    if (parse_coordinates && gold.executed) {
      if (const auto boxes = parse_coordinates(*prediction)) r.iou = layout_iou(*boxes, boxes_of(gold.document));
    }
    return r;
  }
  const auto c = dsl::compile(*prediction);
  r.compiled = c.ok();
  const auto pred = instances(c.parsed.program);
  r.instance = instance_f1(pred, gold.instances);
  r.argument = argument_f1(pred, gold.instances);
  r.instance_by_component = by_component(pred, gold.instances, false);
  r.argument_by_component = by_component(pred, gold.instances, true);
  if (!r.compiled) return r;
  const auto e = kernel::execute(c.parsed.program);
  r.executed = e.ok();
  if (!r.executed) return r;
  r.iou = layout_iou(boxes_of(e.document), boxes_of(gold.document));
  r.passed = gold.executed && documents_match(e.document, gold.document, opts.eps);
  return r;
}

Aggregate aggregate(const std::vector<EvalReport>& reports) {
  Aggregate a;
  a.records = reports.size();
  if (reports.empty()) return a;
  std::map<std::string, std::pair<double, int>> inst, args;
  for (const auto& r : reports) {
    a.compile_rate += r.compiled ? 1.0 : 0.0;
    a.pass_rate += r.passed ? 1.0 : 0.0;
    a.instance_f1 += r.instance.f1;
    a.argument_f1 += r.argument.f1;
    a.iou_overall += r.iou.overall;
    a.iou_module += r.iou.module;
    a.iou_unit += r.iou.unit;
    a.iou_room += r.iou.room;
    for (const auto& [k, v] : r.instance_by_component) inst[k].first += v.f1, ++inst[k].second;
    for (const auto& [k, v] : r.argument_by_component) args[k].first += v.f1, ++args[k].second;
  }
  const double n = static_cast<double>(reports.size());
  for (double* v : {&a.compile_rate, &a.pass_rate, &a.instance_f1, &a.argument_f1, &a.iou_overall, &a.iou_module,
                    &a.iou_unit, &a.iou_room}) {
    *v /= n;
  }
  for (const auto& [k, v] : inst) a.instance_f1_by_component[k] = v.first / v.second;
  for (const auto& [k, v] : args) a.argument_f1_by_component[k] = v.first / v.second;
  return a;
}

BatchReport batch_evaluate(const std::vector<GoldRecord>& golds, const std::map<std::string, std::string>& predictions,
                           const BatchOptions& opts, CoordinateParser parse_coordinates) {
  BatchReport out;
  out.coordinate_output = opts.eval.coordinate_output;
  std::map<std::string, std::vector<EvalReport>> cohorts;
  for (const auto& g : golds) {
    const auto it = predictions.find(g.id);
    std::optional<std::string> pred;
    if (it != predictions.end()) pred = it->second;
    else out.missing.push_back(g.id);
    auto r = evaluate(g, pred, opts.eval, parse_coordinates);
    for (const auto& key : opts.group_by) {
      int count = 0, threshold = 0;
      if (key == "modules") count = g.modules, threshold = opts.module_threshold;
      else if (key == "units") count = g.units, threshold = opts.unit_threshold;
      else if (key == "rooms") count = g.rooms, threshold = opts.room_threshold;
      else continue;
      const auto t = std::to_string(threshold);
      cohorts[count <= threshold ? key + "<=" + t : key + ">" + t].push_back(r);
    }
    out.records.push_back(std::move(r));
  }
  out.overall = aggregate(out.records);
  for (const auto& [k, v] : cohorts) out.cohorts[k] = aggregate(v);
  return out;
}

namespace {

std::string fixed(double v, bool na = false) {
  if (na) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<std::pair<std::string, const Aggregate*>> rows(const BatchReport& r) {
  std::vector<std::pair<std::string, const Aggregate*>> out{{"all", &r.overall}};
  for (const auto& [k, v] : r.cohorts) out.emplace_back(k, &v);
  return out;
}

}  // namespace

std::string aggregate_csv(const BatchReport& r) {
  std::string out =
      "cohort,records,compile_rate,pass_rate,instance_f1,argument_f1,iou_overall,iou_module,iou_unit,iou_room\n";
  for (const auto& [name, a] : rows(r)) {
    out += name + "," + std::to_string(a->records);
    int col = 0;
    for (double v : {a->compile_rate, a->pass_rate, a->instance_f1, a->argument_f1, a->iou_overall, a->iou_module,
                     a->iou_unit, a->iou_room}) {
      out += "," + fixed(v, r.coordinate_output && col++ < 4);
    }
    out += "\n";
  }
  return out;
}

std::string aggregate_markdown(const BatchReport& r) {
  std::string out =
      "| cohort | records | compile | pass | instance F1 | argument F1 | IoU | IoU module | IoU unit | IoU room |\n"
      "|---|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& [name, a] : rows(r)) {
    out += "| " + name + " | " + std::to_string(a->records);
    int col = 0;
    for (double v : {a->compile_rate, a->pass_rate, a->instance_f1, a->argument_f1, a->iou_overall, a->iou_module,
                     a->iou_unit, a->iou_room}) {
      out += " | " + fixed(100.0 * v, r.coordinate_output && col++ < 4);
    }
    out += " |\n";
  }
  if (!r.coordinate_output && !r.overall.instance_f1_by_component.empty()) {
    out += "\n| component | instance F1 | argument F1 |\n|---|---:|---:|\n";
    for (const auto& [k, v] : r.overall.instance_f1_by_component) {
      const auto it = r.overall.argument_f1_by_component.find(k);
      out += "| " + k + " | " + fixed(100.0 * v) + " | " +
             fixed(100.0 * (it == r.overall.argument_f1_by_component.end() ? 0.0 : it->second)) + " |\n";
    }
  }
  return out;
}

}  // namespace mbl::metrics
