// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/dsl/repair.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <memory>
#include <set>

#include "mbl/dsl/canonical.hpp"
#include "mbl/dsl/parser.hpp"
#include "mbl/dsl/signatures.hpp"

namespace mbl::dsl {

namespace {

struct Decl {
  std::string name;
  EntityKind kind;
  std::size_t index;
};

struct Candidate {
  Program program;
  std::string note;
};

std::optional<EntityKind> kind_from_type(std::string_view t) {
  if (t == "Module") return EntityKind::Module;
  if (t == "List<Module>") return EntityKind::ModuleList;
  if (t == "Unit") return EntityKind::Unit;
  if (t == "Room") return EntityKind::Room;
  if (t == "Door") return EntityKind::Door;
  if (t == "Hole") return EntityKind::Hole;
  return std::nullopt;
}

std::vector<Decl> declarations(const Program& p) {
  std::vector<Decl> out;
  for (std::size_t k = 0; k < p.statements.size(); ++k) {
    const auto& s = p.statements[k];
    if (s.result) {
      auto kind = s.op ? result_kind(*s.op) : kind_from_type(s.result->declared_type);
      out.push_back({s.result->name, kind.value_or(EntityKind::Module), k});
    }
    for (const auto& pc : s.pieces) out.push_back({pc.binding.name, EntityKind::Module, k});
  }
  return out;
}

KindLookup lookup_before(const Program& p, std::size_t i) {
  auto decls = std::make_shared<std::vector<Decl>>(declarations(p));
  return [decls, i](std::string_view n) -> std::optional<EntityKind> {
    for (const auto& d : *decls) {
      if (d.index < i && d.name == n) return d.kind;
    }
    return std::nullopt;
  };
}

std::optional<std::size_t> declared_at(const Program& p, std::string_view name) {
  for (const auto& d : declarations(p)) {
    if (d.name == name) return d.index;
  }
  return std::nullopt;
}

std::optional<std::string> nearest_before(const Program& p, std::size_t i, EntityKind k,
                                          const std::set<std::string>& avoid = {}) {
  std::optional<std::string> best;
  for (const auto& d : declarations(p)) {
    if (d.index < i && d.kind == k && !avoid.count(d.name)) best = d.name;
  }
  return best;
}

void for_each_ref(ActionStatement& s, const std::function<void(std::string&)>& fn) {
  for (auto& a : s.args) {
    if (auto* r = std::get_if<Ref>(&a.value)) fn(r->name);
    if (auto* l = std::get_if<RefList>(&a.value)) {
      for (auto& n : l->names) fn(n);
    }
  }
}

bool references(const ActionStatement& s, const std::set<std::string>& names) {
  bool hit = false;
  auto copy = s;
  for_each_ref(copy, [&](std::string& n) { hit = hit || names.count(n) > 0; });
  return hit;
}

void to_named(ActionStatement& s) {
  if (s.style == ArgStyle::Named || s.signature < 0) return;
  const auto bound = bind_arguments(s);
  std::vector<Argument> args;
  for (std::size_t k = 0; k < bound.size(); ++k) {
    Argument a = *bound[k].arg;
    a.name = bound[k].param ? bound[k].name : "arg" + std::to_string(k);
    args.push_back(std::move(a));
  }
  s.args = std::move(args);
  s.style = ArgStyle::Named;
  s.host_omitted = false;
}

void reresolve(ActionStatement& s) {
  if (s.style == ArgStyle::Named) resolve_signature(s, {});
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::string squash(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (std::isalpha(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::vector<std::string_view> vocabulary(ParamType t) {
  std::vector<std::string_view> v;
  auto add = [&](std::span<const std::string_view> s) { v.insert(v.end(), s.begin(), s.end()); };
  switch (t) {
    case ParamType::Direction: add(directions()); break;
    case ParamType::Alignment:
      add(directions());
      v.push_back("none");
      break;
    case ParamType::Corner: add(corners()); break;
    case ParamType::SplitDirection: add(split_directions()); break;
    case ParamType::SetMode: add(set_modes()); break;
    default: break;
  }
  return v;
}

std::string fix_enum(ParamType t, std::string_view raw) {
  std::string key = squash(raw);
  static const std::vector<std::pair<std::string_view, std::string_view>> synonyms{
      {"left", "west"},  {"right", "east"},     {"up", "north"},        {"top", "north"},
      {"down", "south"}, {"bottom", "south"},   {"eastwest", "westeast"}, {"southnorth", "northsouth"},
      {"horizontal", "westeast"}, {"vertical", "northsouth"}, {"center", "none"}, {"centre", "none"},
      {"middle", "none"}};
  for (const auto& [from, to] : synonyms) {
    if (key == from) key = std::string(to);
  }
  const auto vocab = vocabulary(t);
  std::string best(vocab.front());
  std::size_t best_d = static_cast<std::size_t>(-1);
  for (auto w : vocab) {
    const std::size_t d = levenshtein(key, squash(w));
    if (d < best_d) {
      best_d = d;
      best = std::string(w);
    }
  }
  return best;
}

std::string fix_room_label(std::string_view text, const std::vector<std::string>& types) {
  std::string suffix;
  std::size_t end = text.size();
  while (end > 0 && (std::isdigit(static_cast<unsigned char>(text[end - 1])) || text[end - 1] == ' ' ||
                     text[end - 1] == '_')) {
    --end;
  }
  suffix = std::string(text.substr(end));
  const std::string label = semantic_label(text);
  std::string best = types.empty() ? std::string("room") : types.front();
  std::size_t best_d = static_cast<std::size_t>(-1);
  for (const auto& t : types) {
    const std::size_t d = levenshtein(label, t);
    if (d < best_d) {
      best_d = d;
      best = t;
    }
  }
  bool up = true;
  for (auto& c : best) {
    if (up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    up = c == ' ';
  }
  return best + suffix;
}

std::string fresh_name(const Program& p, const std::string& base) {
  std::set<std::string> used;
  for (const auto& d : declarations(p)) used.insert(d.name);
  for (int k = 2;; ++k) {
    std::string n = base + "_" + std::to_string(k);
    if (!used.count(n)) return n;
  }
}

class Repairer {
 public:
  Repairer(const RepairPolicy& pol) : pol_(pol) {}

  std::size_t errors(const Program& p) const { return error_count(static_check(p, pol_.check)); }

  RepairResult run(Program p) {
    RepairResult r;
    for (auto& s : p.statements) to_named(s);
    rebuild_symbols(p);
    auto diags = static_check(p, pol_.check);
    std::size_t count = error_count(diags);
    r.error_trajectory.push_back(count);
    const std::size_t limit = pol_.max_steps ? pol_.max_steps : 8 * p.statements.size() + 32;
    std::size_t steps = 0;
    while (count > 0) {
      if (steps++ >= limit) {
        r.unrepairable = true;
        r.reason = "repair did not converge";
        break;
      }
      std::size_t first = kNoStatement;
      for (const auto& d : diags) {
        if (d.severity == Severity::Error) first = std::min(first, d.statement);
      }
      if (first == kNoStatement) {
        r.unrepairable = true;
        r.reason = "errors outside any statement";
        break;
      }
      if (auto why = missing_value(p, first)) {
        r.unrepairable = true;
        r.reason = *why;
        break;
      }
      bool accepted = false;
      for (auto& c : candidates(p, first)) {
        rebuild_symbols(c.program);
        auto next = static_check(c.program, pol_.check);
        const std::size_t n = error_count(next);
        if (n < count) {
          p = std::move(c.program);
          diags = std::move(next);
          count = n;
          r.log.push_back(c.note);
          r.error_trajectory.push_back(count);
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        r.unrepairable = true;
        r.reason = "no fix lowers the error count at statement " + std::to_string(first + 1);
        break;
      }
    }
    if (!r.unrepairable) finish(p, r);
    r.program = std::move(p);
    return r;
  }

 private:
  // A required non-reference argument that nothing in the statement can supply.
  std::optional<std::string> missing_value(const Program& p, std::size_t i) const {
    const auto& s = p.statements[i];
    if (s.signature < 0) return std::nullopt;
    const auto bound = bind_arguments(s);
    for (const auto& b : bound) {
      if (!b.param) return std::nullopt;  // an unknown argument may still be renamed into place
    }
    const Signature& sig = signature(s.signature);
    for (const auto& prm : sig.params) {
      if (!prm.required || expected_ref_kind(prm.type)) continue;
      const bool given = std::any_of(bound.begin(), bound.end(), [&](const BoundArg& b) { return b.param == &prm; });
      if (!given) {
        return "statement " + std::to_string(i + 1) + " lacks required argument '" + std::string(prm.name) +
               "' and no value can be inferred";
      }
    }
    return std::nullopt;
  }

  ArgValue default_for(const Param& prm) const {
    if (auto it = pol_.defaults.find(prm.name); it != pol_.defaults.end()) return it->second;
    return *prm.fallback;
  }

  void finish(Program& p, RepairResult& r) const {
    for (std::size_t i = 0; i < p.statements.size(); ++i) {
      auto& s = p.statements[i];
      if (s.signature < 0) continue;
      const Signature& sig = signature(s.signature);
      std::vector<std::string> before;
      for (const auto& a : s.args) before.push_back(a.name.value_or(""));
      if (pol_.fill_optional) {
        for (const auto& prm : sig.params) {
          if (prm.required || prm.omittable_host || !prm.fallback) continue;
          const bool given = std::any_of(s.args.begin(), s.args.end(),
                                         [&](const Argument& a) { return a.name && *a.name == prm.name; });
          if (given) continue;
          s.args.push_back(Argument{std::string(prm.name), default_for(prm), s.span});
          r.log.push_back("statement " + std::to_string(i + 1) + ": filled " + std::string(prm.name) + " = " +
                          format_value(s.args.back().value));
        }
      }
      auto rank = [&](const Argument& a) {
        for (std::size_t k = 0; k < sig.params.size(); ++k) {
          if (a.name && *a.name == sig.params[k].name) return k;
        }
        return sig.params.size();
      };
      std::stable_sort(s.args.begin(), s.args.end(),
                       [&](const Argument& a, const Argument& b) { return rank(a) < rank(b); });
      std::vector<std::string> after;
      for (const auto& a : s.args) after.push_back(a.name.value_or(""));
      before.resize(std::min(before.size(), after.size()));
      if (!std::equal(before.begin(), before.end(), after.begin())) {
        r.log.push_back("statement " + std::to_string(i + 1) + ": arguments put in parameter order");
      }
    }
    rebuild_symbols(p);
  }

  static std::string at(std::size_t i) { return "statement " + std::to_string(i + 1) + ": "; }

  std::vector<Candidate> candidates(const Program& p, std::size_t i) const {
    std::vector<Candidate> out;
    const ActionStatement& s = p.statements[i];
    auto edit = [&](const std::string& note, const std::function<bool(ActionStatement&, Program&)>& fn) {
      Program q = p;
      if (!fn(q.statements[i], q)) return;
      reresolve(q.statements[i]);
      out.push_back({std::move(q), at(i) + note});
    };

    if (s.signature >= 0) {
      const Signature& sig = signature(s.signature);
      const KindLookup lookup = lookup_before(p, i);

      if (s.result && s.result->declared_type != "var" && s.result->declared_type != sig.result_type) {
        edit("declared type set to " + std::string(sig.result_type), [&](ActionStatement& t, Program&) {
          t.result->declared_type = std::string(sig.result_type);
          return true;
        });
      }
      for (std::size_t k = 0; k < s.pieces.size(); ++k) {
        if (s.pieces[k].binding.declared_type != "Module" && s.pieces[k].binding.declared_type != "var") {
          edit("split piece declared as Module", [&](ActionStatement& t, Program&) {
            t.pieces[k].binding.declared_type = "Module";
            return true;
          });
        }
        for (std::size_t m = 0; m < k; ++m) {
          if (s.pieces[m].index == s.pieces[k].index) {
            edit("piece binding '" + s.pieces[k].binding.name + "' moved to the free index",
                 [&](ActionStatement& t, Program&) {
                   t.pieces[k].index = 1 - t.pieces[k].index;
                   return true;
                 });
          }
        }
      }

      redefinition_fixes(p, i, out);

      if (auto perm = argument_permutation(s, lookup)) {
        edit("arguments reordered to fit their parameters", [&](ActionStatement& t, Program&) {
          std::vector<std::size_t> slots;
          for (std::size_t k = 0; k < t.args.size(); ++k) {
            if (t.args[k].name && sig.find(*t.args[k].name)) slots.push_back(k);
          }
          std::vector<ArgValue> vals;
          for (auto k : slots) vals.push_back(t.args[k].value);
          for (std::size_t k = 0; k < slots.size(); ++k) t.args[slots[k]].value = vals[(*perm)[k]];
          return true;
        });
      }

      argument_fixes(p, i, sig, lookup, out);
      missing_fixes(p, i, sig, out);
      retarget(p, i, out);
    }

    drop_rebind(p, i, out);
    cascade(p, i, out);
    return out;
  }

  void redefinition_fixes(const Program& p, std::size_t i, std::vector<Candidate>& out) const {
    const auto decls = declarations(p);
    // a verbatim repeat of an earlier statement goes away instead of getting a new name
    for (std::size_t k = 0; k < i; ++k) {
      if (structurally_equal(p.statements[k], p.statements[i])) {
        Program q = p;
        q.statements.erase(q.statements.begin() + static_cast<long>(i));
        out.push_back({std::move(q), at(i) + "repeats statement " + std::to_string(k + 1) + "; dropped"});
        break;
      }
    }
    for (const auto& name : declared_names(p.statements[i])) {
      const bool earlier = std::any_of(decls.begin(), decls.end(),
                                       [&](const Decl& d) { return d.name == name && d.index < i; });
      const bool twice_here =
          std::count_if(decls.begin(), decls.end(), [&](const Decl& d) { return d.name == name && d.index == i; }) > 1;
      if (!earlier && !twice_here) continue;
      Program q = p;
      const std::string fresh = fresh_name(p, name);
      auto& t = q.statements[i];
      bool done = false;
      if (!twice_here && t.result && t.result->name == name) {
        t.result->name = fresh;
        done = true;
      }
      for (auto it = t.pieces.rbegin(); !done && it != t.pieces.rend(); ++it) {
        if (it->binding.name == name) {
          it->binding.name = fresh;
          done = true;
        }
      }
      // later uses refer to the newest declaration
      for (std::size_t k = i + 1; k < q.statements.size(); ++k) {
        for_each_ref(q.statements[k], [&](std::string& n) {
          if (n == name) n = fresh;
        });
        const auto redeclared = declared_names(q.statements[k]);
        if (std::count(redeclared.begin(), redeclared.end(), name)) break;
      }
      out.push_back({std::move(q), at(i) + "'" + name + "' redeclared; renamed to '" + fresh + "'"});
    }
  }

  void argument_fixes(const Program& p, std::size_t i, const Signature& sig, const KindLookup& lookup,
                      std::vector<Candidate>& out) const {
    const ActionStatement& s = p.statements[i];
    auto edit = [&](const std::string& note, const std::function<bool(ActionStatement&, Program&)>& fn) {
      Program q = p;
      if (!fn(q.statements[i], q)) return;
      reresolve(q.statements[i]);
      out.push_back({std::move(q), at(i) + note});
    };
    std::set<std::string> given;
    for (const auto& a : s.args) {
      if (a.name) given.insert(*a.name);
    }

    for (std::size_t k = 0; k < s.args.size(); ++k) {
      const Argument& a = s.args[k];
      const std::string name = a.name.value_or("");
      const Param* prm = sig.find(name);

      if (!prm) {
        for (const auto& cand : sig.params) {
          if (given.count(std::string(cand.name))) continue;
          if (fit(cand, a.value, lookup) != Fit::Exact) continue;
          edit("argument '" + name + "' renamed to '" + std::string(cand.name) + "'",
               [&](ActionStatement& t, Program&) {
                 t.args[k].name = std::string(cand.name);
                 return true;
               });
          break;
        }
        edit("unknown argument '" + name + "' removed", [&](ActionStatement& t, Program&) {
          t.args.erase(t.args.begin() + static_cast<long>(k));
          return true;
        });
        continue;
      }

      for (std::size_t m = 0; m < k; ++m) {
        if (s.args[m].name == a.name) {
          edit("duplicate argument '" + name + "' removed", [&](ActionStatement& t, Program&) {
            t.args.erase(t.args.begin() + static_cast<long>(k));
            return true;
          });
          break;
        }
      }

      value_fixes(p, i, k, *prm, lookup, out);

      if (!prm->required && !prm->omittable_host && fit(*prm, a.value, lookup) != Fit::Exact) {
        edit("invalid optional argument '" + name + "' reset to its default", [&](ActionStatement& t, Program&) {
          t.args[k].value = default_for(*prm);
          return true;
        });
      }
    }

    // alignment must run across the placement direction
    const auto find = [&](std::string_view n) -> const Argument* {
      for (const auto& a : s.args) {
        if (a.name && *a.name == n) return &a;
      }
      return nullptr;
    };
    const auto* dir = find("direction");
    const auto* align = find("alignment");
    if (dir && align && std::holds_alternative<Text>(dir->value) && std::holds_alternative<Text>(align->value)) {
      const auto& d = std::get<Text>(dir->value).value;
      const auto& al = std::get<Text>(align->value).value;
      if (is_direction(d) && is_direction(al) && !perpendicular(d, al)) {
        edit("alignment '" + al + "' replaced by none", [&](ActionStatement& t, Program&) {
          for (auto& a : t.args) {
            if (a.name && *a.name == "alignment") a.value = Text{"none"};
          }
          return true;
        });
      }
    }

    const auto* mods = find("modules");
    const auto* dims = find("dimensions");
    if (mods && std::holds_alternative<RefList>(mods->value)) {
      const auto& names = std::get<RefList>(mods->value).names;
      if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
        edit("repeated module removed from list", [&](ActionStatement& t, Program&) {
          for (auto& a : t.args) {
            if (auto* l = std::get_if<RefList>(&a.value); l && a.name && *a.name == "modules") {
              std::vector<std::string> u;
              for (const auto& n : l->names) {
                if (std::find(u.begin(), u.end(), n) == u.end()) u.push_back(n);
              }
              l->names = u;
            }
          }
          return true;
        });
      }
      if (dims && std::holds_alternative<NumberList>(dims->value)) {
        const auto& vals = std::get<NumberList>(dims->value).values;
        if (!vals.empty() && vals.size() != names.size() && !names.empty()) {
          edit("dimensions resized to one per module", [&](ActionStatement& t, Program&) {
            for (auto& a : t.args) {
              if (auto* l = std::get_if<NumberList>(&a.value); l && a.name && *a.name == "dimensions") {
                const double last = l->values.back();
                l->values.resize(names.size(), last);
              }
            }
            return true;
          });
        }
      }
    }
  }

  void value_fixes(const Program& p, std::size_t i, std::size_t k, const Param& prm, const KindLookup& lookup,
                   std::vector<Candidate>& out) const {
    const ActionStatement& s = p.statements[i];
    const Argument& a = s.args[k];
    const std::string pname(prm.name);
    auto set_value = [&](const std::string& note, ArgValue v) {
      Program q = p;
      q.statements[i].args[k].value = std::move(v);
      reresolve(q.statements[i]);
      out.push_back({std::move(q), at(i) + note});
    };
    const auto want = expected_ref_kind(prm.type);

    if (const auto* r = std::get_if<Ref>(&a.value); r && want && prm.type != ParamType::ModuleList) {
      if (lookup(r->name) == want) return;
      sequencing_fixes(p, i, r->name, out);
      if (auto n = nearest_before(p, i, *want)) {
        set_value("'" + r->name + "' replaced by '" + *n + "'", Ref{*n});
      }
      return;
    }
    if (const auto* l = std::get_if<RefList>(&a.value); l && prm.type == ParamType::ModuleList) {
      for (std::size_t m = 0; m < l->names.size(); ++m) {
        const std::string& n = l->names[m];
        if (lookup(n) == EntityKind::Module) continue;
        sequencing_fixes(p, i, n, out);
        std::set<std::string> avoid(l->names.begin(), l->names.end());
        if (auto rep = nearest_before(p, i, EntityKind::Module, avoid)) {
          RefList fixed = *l;
          fixed.names[m] = *rep;
          set_value("'" + n + "' replaced by '" + *rep + "'", fixed);
        }
        if (l->names.size() > 1) {
          RefList fixed = *l;
          fixed.names.erase(fixed.names.begin() + static_cast<long>(m));
          set_value("'" + n + "' removed from the module list", fixed);
        }
      }
      return;
    }
    if (want) {
      // a quoted name or a bare value where a reference belongs
      if (const auto* t = std::get_if<Text>(&a.value); t && lookup(t->value) == want) {
        set_value("quoted reference '" + t->value + "' unquoted", Ref{t->value});
      } else if (prm.type == ParamType::ModuleList) {
        if (const auto* r = std::get_if<Ref>(&a.value); r && lookup(r->name) == EntityKind::Module) {
          set_value("single module wrapped in a list", RefList{"Module", {r->name}});
        }
      } else if (auto n = nearest_before(p, i, *want)) {
        set_value("argument '" + pname + "' bound to '" + *n + "'", Ref{*n});
      }
      return;
    }

    const Fit f = fit(prm, a.value, lookup);
    if (const auto* t = std::get_if<Text>(&a.value)) {
      if (prm.type == ParamType::Length || prm.type == ParamType::Offset || prm.type == ParamType::Ratio) {
        char* end = nullptr;
        const double v = std::strtod(t->value.c_str(), &end);
        if (end && *end == '\0' && !t->value.empty() && std::isfinite(v)) {
          set_value("argument '" + pname + "' converted to a number", Number{v});
        }
        return;
      }
      if (prm.type == ParamType::Boolean && (t->value == "true" || t->value == "false")) {
        set_value("argument '" + pname + "' converted to a boolean", Boolean{t->value == "true"});
        return;
      }
      if (f == Fit::Shape && vocabulary(prm.type).size() > 0) {
        const std::string fixed = fix_enum(prm.type, t->value);
        set_value("'" + t->value + "' corrected to '" + fixed + "'", Text{fixed});
        return;
      }
      if (prm.type == ParamType::Label && s.op && result_kind(*s.op) == EntityKind::Room) {
        const auto& types = pol_.check.room_types;
        if (std::find(types.begin(), types.end(), semantic_label(t->value)) == types.end()) {
          const std::string fixed = fix_room_label(t->value, types);
          set_value("room name '" + t->value + "' corrected to '" + fixed + "'", Text{fixed});
        }
        return;
      }
    }
    if (const auto* n = std::get_if<Number>(&a.value); n && f == Fit::Shape) {
      const double v = n->value;
      if (prm.type == ParamType::Ratio) {
        const double fixed = (v > 1.0 && v < 100.0) ? v / 100.0 : 0.5;
        set_value("ratio " + format_number(v) + " replaced by " + format_number(fixed), Number{fixed});
      } else if (v < 0.0) {
        set_value("negative " + pname + " made positive", Number{-v});
      }
      return;
    }
    if (const auto* l = std::get_if<NumberList>(&a.value); l && f == Fit::Shape) {
      NumberList fixed = *l;
      for (auto& v : fixed.values) v = std::abs(v);
      fixed.values.erase(std::remove(fixed.values.begin(), fixed.values.end(), 0.0), fixed.values.end());
      if (!fixed.values.empty()) set_value("dimensions made positive", fixed);
      return;
    }
    if (const auto* num = std::get_if<Number>(&a.value); num && prm.type == ParamType::Label) {
      set_value("numeric name quoted", Text{format_number(num->value)});
    }
  }

  // A name used before the statement that declares it.
  void sequencing_fixes(const Program& p, std::size_t i, const std::string& name, std::vector<Candidate>& out) const {
    const auto j = declared_at(p, name);
    if (!j || *j <= i) return;
    {
      Program q = p;
      auto decl = q.statements[*j];
      q.statements.erase(q.statements.begin() + static_cast<long>(*j));
      q.statements.insert(q.statements.begin() + static_cast<long>(i), std::move(decl));
      out.push_back({std::move(q), at(i) + "declaration of '" + name + "' moved before its first use"});
    }
    {
      Program q = p;
      auto use = q.statements[i];
      q.statements.insert(q.statements.begin() + static_cast<long>(*j) + 1, std::move(use));
      q.statements.erase(q.statements.begin() + static_cast<long>(i));
      out.push_back({std::move(q), at(i) + "moved after the declaration of '" + name + "'"});
    }
  }

  void missing_fixes(const Program& p, std::size_t i, const Signature& sig, std::vector<Candidate>& out) const {
    const ActionStatement& s = p.statements[i];
    for (const auto& prm : sig.params) {
      if (!prm.required) continue;
      const bool given = std::any_of(s.args.begin(), s.args.end(),
                                     [&](const Argument& a) { return a.name && *a.name == prm.name; });
      if (given) continue;
      const auto want = expected_ref_kind(prm.type);
      if (!want) continue;
      const auto n = nearest_before(p, i, *want);
      if (!n) continue;
      Program q = p;
      ArgValue v = prm.type == ParamType::ModuleList ? ArgValue{RefList{"Module", {*n}}} : ArgValue{Ref{*n}};
      q.statements[i].args.push_back(Argument{std::string(prm.name), v, s.span});
      reresolve(q.statements[i]);
      out.push_back({std::move(q), at(i) + "missing '" + std::string(prm.name) + "' bound to '" + *n + "'"});
    }
  }

  // Incorrect function: the same arguments read better under another callee.
  void retarget(const Program& p, std::size_t i, std::vector<Candidate>& out) const {
    const ActionStatement& s = p.statements[i];
    const KindLookup lookup = lookup_before(p, i);
    const auto& table = signature_table();
    for (std::size_t c = 0; c < table.size(); ++c) {
      const Signature& sig = table[c];
      if (sig.callee == s.callee && sig.constructor == s.constructor) continue;
      ActionStatement t = s;
      t.callee = std::string(sig.callee);
      t.constructor = sig.constructor;
      std::set<std::string> taken;
      for (const auto& a : t.args) {
        if (a.name && sig.find(*a.name)) taken.insert(*a.name);
      }
      bool ok = true;
      for (auto& a : t.args) {
        if (a.name && sig.find(*a.name)) continue;
        const Param* into = nullptr;
        for (const auto& prm : sig.params) {
          if (!taken.count(std::string(prm.name)) && fit(prm, a.value, lookup) == Fit::Exact) {
            into = &prm;
            break;
          }
        }
        if (!into) {
          ok = false;
          break;
        }
        a.name = std::string(into->name);
        taken.insert(*a.name);
      }
      if (!ok) continue;
      reresolve(t);
      if (t.signature != static_cast<int>(c)) continue;
      if (s.result && t.result && t.result->declared_type != "var") {
        t.result->declared_type = std::string(sig.result_type);
      }
      Program q = p;
      q.statements[i] = std::move(t);
      out.push_back({std::move(q), at(i) + "'" + s.callee + "' replaced by '" + std::string(sig.callee) + "'"});
    }
  }

  void drop_rebind(const Program& p, std::size_t i, std::vector<Candidate>& out) const {
    Program q = p;
    const auto names = declared_names(p.statements[i]);
    const auto decls = declarations(p);
    q.statements.erase(q.statements.begin() + static_cast<long>(i));
    for (const auto& name : names) {
      EntityKind kind = EntityKind::Module;
      for (const auto& d : decls) {
        if (d.name == name && d.index == i) kind = d.kind;
      }
      const auto rep = nearest_before(q, i, kind);
      if (!rep) continue;
      for (std::size_t k = i; k < q.statements.size(); ++k) {
        for_each_ref(q.statements[k], [&](std::string& n) {
          if (n == name) n = *rep;
        });
      }
    }
    out.push_back({std::move(q), at(i) + "'" + p.statements[i].callee + "' call dropped"});
  }

  void cascade(const Program& p, std::size_t i, std::vector<Candidate>& out) const {
    std::set<std::size_t> drop{i};
    std::set<std::string> gone;
    for (const auto& n : declared_names(p.statements[i])) gone.insert(n);
    for (std::size_t k = i + 1; k < p.statements.size(); ++k) {
      if (references(p.statements[k], gone)) {
        drop.insert(k);
        for (const auto& n : declared_names(p.statements[k])) gone.insert(n);
      }
    }
    if (drop.size() == 1) return;  // same as a plain drop
    Program q;
    for (std::size_t k = 0; k < p.statements.size(); ++k) {
      if (!drop.count(k)) q.statements.push_back(p.statements[k]);
    }
    out.push_back({std::move(q), at(i) + "dropped with " + std::to_string(drop.size() - 1) + " dependent statement(s)"});
  }

  const RepairPolicy& pol_;
};

}  // namespace

RepairResult repair_program(Program program, const RepairPolicy& policy) {
  return Repairer(policy).run(std::move(program));
}

RepairResult repair_source(std::string_view source, const RepairPolicy& policy) {
  auto parsed = parse_program(source);
  std::vector<std::string> notes;
  for (const auto& d : parsed.diagnostics) {
    if (d.severity == Severity::Error) notes.push_back("skipped unparsable code: " + format_diagnostic(d));
  }
  auto r = repair_program(std::move(parsed.program), policy);
  r.log.insert(r.log.begin(), notes.begin(), notes.end());
  return r;
}

}  // namespace mbl::dsl
