// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/dsl/check.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mbl/dsl/signatures.hpp"

namespace mbl::dsl {

namespace {

std::optional<EntityKind> kind_from_type(std::string_view t) {
  if (t == "Module") return EntityKind::Module;
  if (t == "List<Module>") return EntityKind::ModuleList;
  if (t == "Unit") return EntityKind::Unit;
  if (t == "Room") return EntityKind::Room;
  if (t == "Door") return EntityKind::Door;
  if (t == "Hole") return EntityKind::Hole;
  return std::nullopt;
}

bool enum_type(ParamType t) {
  return t == ParamType::Direction || t == ParamType::Corner || t == ParamType::Alignment ||
         t == ParamType::SplitDirection || t == ParamType::SetMode;
}

bool kuhn(std::size_t slot, const std::vector<std::vector<char>>& ok, std::vector<int>& owner,
          std::vector<char>& seen) {
  // an unclaimed value first, so values that already fit stay put when they can
  for (std::size_t v = 0; v < ok.size(); ++v) {
    if (ok[slot][v] && !seen[v] && owner[v] < 0) {
      seen[v] = 1;
      owner[v] = static_cast<int>(slot);
      return true;
    }
  }
  for (std::size_t v = 0; v < ok.size(); ++v) {
    if (!ok[slot][v] || seen[v]) continue;
    seen[v] = 1;
    if (owner[v] < 0 || kuhn(static_cast<std::size_t>(owner[v]), ok, owner, seen)) {
      owner[v] = static_cast<int>(slot);
      return true;
    }
  }
  return false;
}

class Checker {
 public:
  Checker(const Program& p, const CheckOptions& o) : prog_(p), opts_(o) {}

  std::vector<Diagnostic> run() {
    for (std::size_t k = 0; k < prog_.statements.size(); ++k) statement(k);
    return std::move(out_);
  }

 private:
  void report(DiagCategory c, std::string msg, SourceSpan span) {
    out_.push_back({Severity::Error, c, std::move(msg), span, index_});
  }

  std::optional<EntityKind> kind_of(std::string_view n) const {
    const auto it = kinds_.find(std::string(n));
    if (it == kinds_.end()) return std::nullopt;
    return it->second;
  }

  void statement(std::size_t k) {
    index_ = k;
    const ActionStatement& s = prog_.statements[k];
    if (!s.op || s.signature < 0) {
      report(DiagCategory::UnknownOp, "unknown function '" + s.callee + "'", s.span);
    } else {
      bindings(s);
      arguments(s);
    }
    declare(s);
  }

  void bindings(const ActionStatement& s) {
    const Signature& sig = signature(s.signature);
    if (s.result && s.result->declared_type != "var" && s.result->declared_type != sig.result_type) {
      report(DiagCategory::Type,
             "'" + s.callee + "' returns " + std::string(sig.result_type) + ", not " + s.result->declared_type,
             s.result->span);
    }
    std::set<int> idx;
    for (const auto& p : s.pieces) {
      if (p.binding.declared_type != "Module" && p.binding.declared_type != "var") {
        report(DiagCategory::Type, "split pieces are Module, not " + p.binding.declared_type, p.binding.span);
      }
      if (!idx.insert(p.index).second) {
        report(DiagCategory::Type, "split piece " + std::to_string(p.index) + " is bound twice", p.binding.span);
      }
    }
  }

  void arguments(const ActionStatement& s) {
    const Signature& sig = signature(s.signature);
    const auto bound = bind_arguments(s);
    std::set<std::string> given;
    for (const auto& b : bound) {
      if (!b.param) {
        if (s.style == ArgStyle::Named) {
          report(DiagCategory::Arity, "'" + s.callee + "' has no parameter '" + b.name + "'", b.arg->span);
        } else {
          report(DiagCategory::Arity, "too many arguments for '" + s.callee + "'", b.arg->span);
        }
        continue;
      }
      if (!given.insert(b.name).second) {
        report(DiagCategory::Arity, "argument '" + b.name + "' given twice", b.arg->span);
      }
    }
    for (const auto& p : sig.params) {
      if (p.required && !given.count(std::string(p.name))) {
        report(DiagCategory::Arity, "missing argument '" + std::string(p.name) + "'", s.span);
      }
    }

    // undefined names first: they make kind checks meaningless
    bool undefined = false;
    for (const auto& b : bound) {
      if (const auto* r = std::get_if<Ref>(&b.arg->value)) {
        undefined |= !name_defined(r->name, b.arg->span);
      } else if (const auto* l = std::get_if<RefList>(&b.arg->value)) {
        for (const auto& n : l->names) undefined |= !name_defined(n, b.arg->span);
      }
    }

    const KindLookup lookup = [this](std::string_view n) { return kind_of(n); };
    bool all_exact = true;
    for (const auto& b : bound) {
      if (b.param && fit(*b.param, b.arg->value, lookup) != Fit::Exact) all_exact = false;
    }
    if (!all_exact && !undefined && argument_permutation(s, lookup)) {
      report(DiagCategory::WrongArgOrder, "arguments of '" + s.callee + "' are in the wrong order", s.span);
      return;
    }

    for (const auto& b : bound) {
      if (!b.param) continue;
      value_check(s, *b.param, *b.arg, lookup);
    }
    cross_checks(s, bound);
  }

  bool name_defined(const std::string& n, SourceSpan span) {
    if (kinds_.count(n)) return true;
    report(DiagCategory::UndefinedName, "'" + n + "' is not declared before use", span);
    return false;
  }

  void value_check(const ActionStatement& s, const Param& p, const Argument& a, const KindLookup& lookup) {
    const std::string pname(p.name);
    const Fit f = fit(p, a.value, lookup);
    if (f == Fit::Mismatch) {
      report(DiagCategory::Type, "argument '" + pname + "' expects " + std::string(to_string(p.type)), a.span);
      return;
    }
    if (f == Fit::Shape) {
      if (enum_type(p.type)) {
        report(DiagCategory::EnumValue,
               "'" + std::get<Text>(a.value).value + "' is not a valid " + std::string(to_string(p.type)), a.span);
      } else if (p.type == ParamType::Length) {
        report(DiagCategory::Type, "argument '" + pname + "' must be a positive length", a.span);
      } else if (p.type == ParamType::Offset) {
        report(DiagCategory::Type, "argument '" + pname + "' must not be negative", a.span);
      } else if (p.type == ParamType::Ratio) {
        report(DiagCategory::Type, "ratio must lie strictly between 0 and 1", a.span);
      } else if (p.type == ParamType::LengthList) {
        report(DiagCategory::Type, "argument '" + pname + "' needs positive lengths", a.span);
      } else if (p.type == ParamType::ModuleList && std::get<RefList>(a.value).names.empty()) {
        report(DiagCategory::Type, "argument '" + pname + "' is an empty list", a.span);
      } else {
        report(DiagCategory::Type, "argument '" + pname + "' expects a " + std::string(to_string(p.type)), a.span);
      }
      return;
    }
    if (p.type == ParamType::Label) {
      const auto& text = std::get<Text>(a.value).value;
      if (s.op && result_kind(*s.op) == EntityKind::Room) {
        const std::string label = semantic_label(text);
        if (std::find(opts_.room_types.begin(), opts_.room_types.end(), label) == opts_.room_types.end()) {
          report(DiagCategory::EnumValue, "'" + text + "' is not a known room type", a.span);
        }
      } else if (text.empty()) {
        report(DiagCategory::Type, "name must not be empty", a.span);
      }
    }
  }

  static const ArgValue* find_value(const std::vector<BoundArg>& bound, std::string_view name) {
    for (const auto& b : bound) {
      if (b.param && b.name == name) return &b.arg->value;
    }
    return nullptr;
  }

  void cross_checks(const ActionStatement& s, const std::vector<BoundArg>& bound) {
    const OpKind op = *s.op;
    const auto* dir = find_value(bound, "direction");
    const auto* align = find_value(bound, "alignment");
    if (dir && align && std::holds_alternative<Text>(*dir) && std::holds_alternative<Text>(*align)) {
      const auto& d = std::get<Text>(*dir).value;
      const auto& a = std::get<Text>(*align).value;
      if (is_direction(d) && is_direction(a) && !perpendicular(d, a)) {
        report(DiagCategory::EnumValue, "alignment '" + a + "' must be perpendicular to direction '" + d + "'",
               s.span);
      }
    }
    const auto* mods = find_value(bound, "modules");
    if (mods && std::holds_alternative<RefList>(*mods)) {
      const auto& names = std::get<RefList>(*mods).names;
      std::set<std::string> uniq(names.begin(), names.end());
      if (uniq.size() != names.size()) report(DiagCategory::Type, "a module is listed twice", s.span);
      if (op == OpKind::Merge && !names.empty() && names.size() < 2) {
        report(DiagCategory::Type, "merging needs at least two modules", s.span);
      }
      const auto* dims = find_value(bound, "dimensions");
      if (op == OpKind::UnitDirectional && dims && std::holds_alternative<NumberList>(*dims) &&
          std::get<NumberList>(*dims).values.size() != names.size()) {
        report(DiagCategory::Arity, "dimensions must list one value per module", s.span);
      }
    }
  }

  void declare(const ActionStatement& s) {
    auto add = [&](const Binding& b, std::optional<EntityKind> k) {
      if (kinds_.count(b.name)) {
        report(DiagCategory::Redefinition, "'" + b.name + "' is already declared", b.span);
        return;
      }
      if (!k) k = kind_from_type(b.declared_type);
      kinds_.emplace(b.name, k.value_or(EntityKind::Module));
    };
    if (s.result) add(*s.result, s.op ? result_kind(*s.op) : std::nullopt);
    for (const auto& p : s.pieces) add(p.binding, EntityKind::Module);
  }

  const Program& prog_;
  const CheckOptions& opts_;
  std::map<std::string, EntityKind> kinds_;
  std::vector<Diagnostic> out_;
  std::size_t index_ = 0;
};

}  // namespace

std::optional<std::vector<std::size_t>> argument_permutation(const ActionStatement& s,
                                                             const KindLookup& kind_of) {
  if (s.signature < 0) return std::nullopt;
  std::vector<BoundArg> bound;
  for (auto& b : bind_arguments(s)) {
    if (b.param) bound.push_back(b);
  }
  const std::size_t n = bound.size();
  if (n < 2) return std::nullopt;
  std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
  bool identity = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ok[i][j] = fit(*bound[i].param, bound[j].arg->value, kind_of) == Fit::Exact;
    }
    identity = identity && ok[i][i];
  }
  if (identity) return std::nullopt;
  std::vector<int> owner(n, -1);
  // keep values that already fit where they are
  for (std::size_t i = 0; i < n; ++i) {
    if (ok[i][i]) owner[i] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (ok[i][i]) continue;
    std::vector<char> seen(n, 0);
    if (!kuhn(i, ok, owner, seen)) return std::nullopt;
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t v = 0; v < n; ++v) perm[static_cast<std::size_t>(owner[v])] = v;
  return perm;
}

std::vector<Diagnostic> static_check(const Program& p, const CheckOptions& opts) {
  return Checker(p, opts).run();
}

CompileResult compile(std::string_view source, const CheckOptions& opts) {
  CompileResult r;
  r.parsed = parse_program(source);
  r.diagnostics = r.parsed.diagnostics;
  auto more = static_check(r.parsed.program, opts);
  r.diagnostics.insert(r.diagnostics.end(), more.begin(), more.end());
  return r;
}

}  // namespace mbl::dsl
