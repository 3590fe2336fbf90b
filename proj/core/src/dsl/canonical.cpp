// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/dsl/canonical.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mbl::dsl {

std::string format_number(double v) {
  if (v == 0.0) return "0";
  if (std::nearbyint(v) == v && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

struct ValuePrinter {
  std::string operator()(const Number& n) const { return format_number(n.value); }
  std::string operator()(const Text& t) const { return quote(t.value); }
  std::string operator()(const Boolean& b) const { return b.value ? "true" : "false"; }
  std::string operator()(const PointValue& p) const {
    if (!p.explicit_point) return "initial_point";
    return "new Point(" + format_number(p.explicit_point->x) + ", " + format_number(p.explicit_point->y) + ")";
  }
  std::string operator()(const Ref& r) const { return r.name; }
  std::string operator()(const RefList& l) const {
    std::string s = "new List<" + l.element_type + "> { ";
    for (std::size_t k = 0; k < l.names.size(); ++k) s += (k ? ", " : "") + l.names[k];
    return s + (l.names.empty() ? "}" : " }");
  }
  std::string operator()(const NumberList& l) const {
    std::string s = "new List<" + l.element_type + "> { ";
    for (std::size_t k = 0; k < l.values.size(); ++k) s += (k ? ", " : "") + format_number(l.values[k]);
    return s + (l.values.empty() ? "}" : " }");
  }
};

bool values_equal(const ArgValue& a, const ArgValue& b) {
  if (a.index() != b.index()) return false;
  if (const auto* pa = std::get_if<PointValue>(&a)) {
    const auto& pb = std::get<PointValue>(b);
    // initial_point and an explicit origin are the same point
    return pa->resolve() == pb.resolve();
  }
  return a == b;
}

std::string head(const ActionStatement& s) {
  std::string out;
  if (s.result) out += s.result->declared_type + " " + s.result->name + " = ";
  if (s.constructor) out += "new ";
  return out + s.callee + "(";
}

std::string tail(const ActionStatement& s) {
  std::string out = ");";
  if (!s.result) return out;
  auto pieces = s.pieces;
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const PieceBinding& a, const PieceBinding& b) { return a.index < b.index; });
  for (const auto& p : pieces) {
    out += "\n" + p.binding.declared_type + " " + p.binding.name + " = " + s.result->name + "[" +
           std::to_string(p.index) + "];";
  }
  return out;
}

std::string raw_statement(const ActionStatement& s) {
  std::string out = head(s);
  for (std::size_t k = 0; k < s.args.size(); ++k) {
    if (k) out += ", ";
    if (s.args[k].name) out += *s.args[k].name + ": ";
    out += format_value(s.args[k].value);
  }
  return out + tail(s);
}

bool has_unmatched(const std::vector<BoundArg>& bound) {
  return std::any_of(bound.begin(), bound.end(), [](const BoundArg& b) { return b.param == nullptr; });
}

bool has_duplicates(const std::vector<BoundArg>& bound) {
  for (std::size_t i = 0; i < bound.size(); ++i) {
    for (std::size_t j = i + 1; j < bound.size(); ++j) {
      if (bound[i].param && bound[i].param == bound[j].param) return true;
    }
  }
  return false;
}

}  // namespace

std::string format_value(const ArgValue& v) { return std::visit(ValuePrinter{}, v); }

std::vector<std::pair<std::string, ArgValue>> normalized_arguments(const ActionStatement& s) {
  std::vector<std::pair<std::string, ArgValue>> out;
  const auto bound = bind_arguments(s);
  if (s.signature < 0) {
    for (const auto& b : bound) out.emplace_back(b.name, b.arg->value);
    return out;
  }
  const Signature& sig = signature(s.signature);
  std::size_t last = 0;
  for (std::size_t k = 0; k < sig.params.size(); ++k) {
    for (const auto& b : bound) {
      if (b.param == &sig.params[k]) last = k + 1;
    }
  }
  for (std::size_t k = 0; k < last; ++k) {
    const Param& p = sig.params[k];
    bool found = false;
    for (const auto& b : bound) {
      if (b.param == &p) {
        out.emplace_back(std::string(p.name), b.arg->value);
        found = true;
      }
    }
    if (!found && !p.required && p.fallback) out.emplace_back(std::string(p.name), *p.fallback);
  }
  for (const auto& b : bound) {
    if (!b.param) out.emplace_back(b.name, b.arg->value);
  }
  return out;
}

std::string canonical_statement(const ActionStatement& s) {
  const auto bound = bind_arguments(s);
  if (s.signature < 0 || has_unmatched(bound) || has_duplicates(bound)) return raw_statement(s);
  std::string out = head(s);
  const auto args = normalized_arguments(s);
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k) out += ", ";
    out += args[k].first + ": " + format_value(args[k].second);
  }
  return out + tail(s);
}

std::string canonicalize(const Program& p) {
  std::string out;
  for (const auto& s : p.statements) out += canonical_statement(s) + "\n";
  return out;
}

std::string to_positional(const Program& p) {
  std::string out;
  for (const auto& s : p.statements) {
    const auto bound = bind_arguments(s);
    if (s.signature < 0 || has_unmatched(bound) || has_duplicates(bound)) {
      out += raw_statement(s) + "\n";
      continue;
    }
    // positional calls cannot skip a parameter except the room host
    const auto args = normalized_arguments(s);
    std::string line = head(s);
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (k) line += ", ";
      line += format_value(args[k].second);
    }
    out += line + tail(s) + "\n";
  }
  return out;
}

bool structurally_equal(const ActionStatement& a, const ActionStatement& b) {
  if (a.callee != b.callee || a.constructor != b.constructor || a.op != b.op || a.signature != b.signature) {
    return false;
  }
  if (a.result.has_value() != b.result.has_value()) return false;
  if (a.result && (a.result->declared_type != b.result->declared_type || a.result->name != b.result->name)) {
    return false;
  }
  auto pa = a.pieces;
  auto pb = b.pieces;
  if (pa.size() != pb.size()) return false;
  auto by_index = [](const PieceBinding& x, const PieceBinding& y) { return x.index < y.index; };
  std::stable_sort(pa.begin(), pa.end(), by_index);
  std::stable_sort(pb.begin(), pb.end(), by_index);
  for (std::size_t k = 0; k < pa.size(); ++k) {
    if (pa[k].index != pb[k].index || pa[k].binding.name != pb[k].binding.name ||
        pa[k].binding.declared_type != pb[k].binding.declared_type) {
      return false;
    }
  }
  const auto xa = normalized_arguments(a);
  const auto xb = normalized_arguments(b);
  if (xa.size() != xb.size()) return false;
  for (std::size_t k = 0; k < xa.size(); ++k) {
    if (xa[k].first != xb[k].first || !values_equal(xa[k].second, xb[k].second)) return false;
  }
  if (a.signature < 0 && a.style != b.style) return false;
  return true;
}

bool structurally_equal(const Program& a, const Program& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t k = 0; k < a.statements.size(); ++k) {
    if (!structurally_equal(a.statements[k], b.statements[k])) return false;
  }
  return true;
}

}  // namespace mbl::dsl
