// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/dsl/parser.hpp"

#include <map>
#include <tuple>

#include "mbl/dsl/lexer.hpp"

namespace mbl::dsl {

namespace {

struct SyntaxError {
  std::string message;
  SourceSpan span;
  DiagCategory category = DiagCategory::Syntax;
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

int fit_weight(Fit f) { return f == Fit::Exact ? 2 : f == Fit::Shape ? 1 : 0; }

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags, std::optional<ArgStyle> hint)
      : toks_(std::move(tokens)), diags_(diags), hint_(hint) {}

  Program run() {
    while (cur().kind != TokenKind::End) {
      const std::size_t start = pos_;
      try {
        statement();
      } catch (const SyntaxError& e) {
        diags_.push_back({Severity::Error, e.category, e.message, e.span, kNoStatement});
        recover(start);
      }
    }
    rebuild_symbols(prog_);
    return std::move(prog_);
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& ahead(std::size_t k) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }

  bool is_punct(const Token& t, std::string_view p) const {
    return t.kind == TokenKind::Punctuation && t.lexeme == p;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError{msg, cur().span, DiagCategory::Syntax};
  }

  std::string describe(const Token& t) const {
    switch (t.kind) {
      case TokenKind::End: return "end of input";
      case TokenKind::Text: return "string \"" + t.lexeme + "\"";
      default: return "'" + t.lexeme + "'";
    }
  }

  void expect(std::string_view p) {
    if (!is_punct(cur(), p)) fail("expected '" + std::string(p) + "' but found " + describe(cur()));
    ++pos_;
  }

  std::string identifier(std::string_view what) {
    if (cur().kind != TokenKind::Identifier) fail("expected " + std::string(what) + " but found " + describe(cur()));
    return toks_[pos_++].lexeme;
  }

  void recover(std::size_t start) {
    if (pos_ == start) ++pos_;
    while (cur().kind != TokenKind::End) {
      if (is_punct(cur(), ";")) {
        ++pos_;
        return;
      }
      if (cur().line_break_before && pos_ > start) return;
      ++pos_;
    }
  }

  // Type := Ident [ '<' Ident '>' ]
  std::optional<std::string> try_type() {
    if (cur().kind != TokenKind::Identifier) return std::nullopt;
    std::string t = toks_[pos_++].lexeme;
    if (is_punct(cur(), "<")) {
      ++pos_;
      if (cur().kind != TokenKind::Identifier) return std::nullopt;
      t += "<" + toks_[pos_++].lexeme;
      if (!is_punct(cur(), ">")) return std::nullopt;
      ++pos_;
      t += ">";
    }
    return t;
  }

  void statement() {
    const SourceSpan span = cur().span;
    std::optional<Binding> binding;
    const std::size_t save = pos_;
    if (auto type = try_type(); type && cur().kind == TokenKind::Identifier && is_punct(ahead(1), "=")) {
      const SourceSpan name_span = cur().span;
      std::string name = toks_[pos_++].lexeme;
      ++pos_;  // '='
      binding = Binding{*type, std::move(name), name_span};
    } else {
      pos_ = save;
    }

    if (binding && cur().kind == TokenKind::Identifier && is_punct(ahead(1), "[")) {
      piece_binding(*binding, span);
      end_statement();
      return;
    }

    ActionStatement s = call();
    s.result = std::move(binding);
    s.span = span;
    end_statement();
    resolve_signature(s, [this](std::string_view n) { return kind_of(n); });
    if (hint_ && !s.args.empty() && s.style != *hint_) {
      diags_.push_back({Severity::Warning, DiagCategory::Syntax,
                        "statement uses a different argument style than expected", span, kNoStatement});
    }
    declare(s);
    prog_.statements.push_back(std::move(s));
  }

  void end_statement() {
    if (is_punct(cur(), ";")) {
      ++pos_;
      return;
    }
    if (!cur().line_break_before) fail("expected ';' or a line break but found " + describe(cur()));
  }

  void piece_binding(const Binding& b, SourceSpan span) {
    const SourceSpan list_span = cur().span;
    const std::string list = toks_[pos_++].lexeme;
    expect("[");
    if (cur().kind != TokenKind::Number) fail("expected an index");
    const double idx = cur().number;
    const SourceSpan idx_span = cur().span;
    ++pos_;
    expect("]");
    ActionStatement* split = nullptr;
    for (auto it = prog_.statements.rbegin(); it != prog_.statements.rend(); ++it) {
      if (it->result && it->result->name == list) {
        split = &*it;
        break;
      }
    }
    if (!split) {
      throw SyntaxError{"'" + list + "' is not declared", list_span, DiagCategory::UndefinedName};
    }
    if (split->op != OpKind::Split) {
      throw SyntaxError{"'" + list + "' is not a list of split pieces", list_span, DiagCategory::Type};
    }
    if (idx != 0.0 && idx != 1.0) {
      throw SyntaxError{"a split yields exactly two pieces (index 0 or 1)", idx_span, DiagCategory::Type};
    }
    (void)span;
    split->pieces.push_back({static_cast<int>(idx), b});
    kinds_.emplace(b.name, EntityKind::Module);
  }

  ActionStatement call() {
    ActionStatement s;
    if (cur().kind == TokenKind::Keyword && cur().lexeme == "new") {
      ++pos_;
      s.constructor = true;
      s.callee = identifier("a type name");
    } else {
      s.callee = identifier("a statement");
      while (is_punct(cur(), ".")) {
        ++pos_;
        s.callee += "." + identifier("a member name");
      }
    }
    expect("(");
    bool named = false;
    bool positional = false;
    if (!is_punct(cur(), ")")) {
      while (true) {
        Argument a;
        a.span = cur().span;
        if (cur().kind == TokenKind::Identifier && is_punct(ahead(1), ":")) {
          a.name = toks_[pos_].lexeme;
          pos_ += 2;
          named = true;
        } else {
          positional = true;
        }
        if (named && positional) {
          throw SyntaxError{"named and positional arguments are mixed", a.span, DiagCategory::Syntax};
        }
        a.value = value();
        s.args.push_back(std::move(a));
        if (is_punct(cur(), ",")) {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(")");
    if (positional) {
      s.style = ArgStyle::Positional;
    } else if (named) {
      s.style = ArgStyle::Named;
    } else {
      s.style = hint_.value_or(ArgStyle::Named);
    }
    return s;
  }

  double number() {
    bool neg = false;
    if (is_punct(cur(), "-")) {
      neg = true;
      ++pos_;
    }
    if (cur().kind != TokenKind::Number) fail("expected a number but found " + describe(cur()));
    const double v = cur().number;
    ++pos_;
    return neg ? -v : v;
  }

  ArgValue value() {
    const Token& t = cur();
    if (t.kind == TokenKind::Number || is_punct(t, "-")) return Number{number()};
    if (t.kind == TokenKind::Text) {
      ++pos_;
      return Text{t.lexeme};
    }
    if (t.kind == TokenKind::Keyword && (t.lexeme == "true" || t.lexeme == "false")) {
      ++pos_;
      return Boolean{t.lexeme == "true"};
    }
    if (t.kind == TokenKind::Identifier) {
      std::string name = t.lexeme;
      ++pos_;
      if (is_punct(cur(), ".") || is_punct(cur(), "(") || is_punct(cur(), "[")) {
        fail("expressions are not allowed as arguments");
      }
      if (name == "initial_point") return PointValue{};
      return Ref{std::move(name)};
    }
    if (t.kind == TokenKind::Keyword && t.lexeme == "new") {
      ++pos_;
      const std::string type = identifier("a type name");
      if (type == "Point") {
        expect("(");
        const double x = number();
        expect(",");
        const double y = number();
        expect(")");
        return PointValue{geom::Point{x, y}};
      }
      if (type == "List") {
        expect("<");
        const std::string elem = identifier("an element type");
        expect(">");
        if (is_punct(cur(), "(")) {
          ++pos_;
          expect(")");
        }
        expect("{");
        const bool numeric = elem == "double" || elem == "int" || elem == "float";
        RefList refs{elem, {}};
        NumberList nums{elem, {}};
        while (!is_punct(cur(), "}")) {
          if (numeric) {
            nums.values.push_back(number());
          } else {
            refs.names.push_back(identifier("a name"));
          }
          if (is_punct(cur(), ",")) {
            ++pos_;
            continue;
          }
          break;
        }
        expect("}");
        if (numeric) return nums;
        return refs;
      }
      fail("cannot construct '" + type + "' inside an argument");
    }
    fail("expected a value but found " + describe(t));
  }

  std::optional<EntityKind> kind_of(std::string_view n) const {
    const auto it = kinds_.find(std::string(n));
    if (it == kinds_.end()) return std::nullopt;
    return it->second;
  }

  void declare(const ActionStatement& s) {
    if (!s.result) return;
    std::optional<EntityKind> k = s.op ? result_kind(*s.op) : std::nullopt;
    if (!k) k = kind_from_type(s.result->declared_type);
    if (k) kinds_.emplace(s.result->name, *k);
  }

  std::vector<Token> toks_;
  std::vector<Diagnostic>& diags_;
  std::optional<ArgStyle> hint_;
  std::size_t pos_ = 0;
  Program prog_;
  std::map<std::string, EntityKind, std::less<>> kinds_;
};

}  // namespace

void resolve_signature(ActionStatement& s, const KindLookup& kind_of) {
  s.op.reset();
  s.signature = -1;
  s.host_omitted = false;
  const auto cands = signatures_for_callee(s.callee, s.constructor);
  if (cands.empty()) return;

  int best = cands.front();
  bool best_omit = false;
  if (s.style == ArgStyle::Named) {
    std::tuple<int, int, int> best_key{1 << 20, 1 << 20, 1 << 20};
    for (int c : cands) {
      const Signature& sig = signature(c);
      int unknown = 0;
      for (const auto& a : s.args) unknown += (a.name && sig.find(*a.name)) ? 0 : 1;
      int missing = 0;
      for (const auto& p : sig.params) {
        if (!p.required) continue;
        bool given = false;
        for (const auto& a : s.args) given = given || (a.name && *a.name == p.name);
        missing += given ? 0 : 1;
      }
      const std::tuple<int, int, int> key{unknown, missing, c};
      if (key < best_key) {
        best_key = key;
        best = c;
      }
    }
  } else {
    int best_score = -1;
    for (int c : cands) {
      for (bool omit : {false, true}) {
        const auto layout = positional_layout(signature(c), s.args.size(), omit);
        if (!layout) continue;
        int score = 0;
        for (std::size_t k = 0; k < layout->size(); ++k) {
          score += fit_weight(fit(*(*layout)[k], s.args[k].value, kind_of));
        }
        if (score > best_score) {
          best_score = score;
          best = c;
          best_omit = omit;
        }
      }
    }
    if (best_score < 0) {
      // No signature admits this many arguments; keep the nearest for diagnostics.
      std::size_t best_gap = static_cast<std::size_t>(-1);
      for (int c : cands) {
        const Signature& sig = signature(c);
        const std::size_t n = s.args.size();
        const std::size_t lo = sig.required_count();
        const std::size_t hi = sig.params.size();
        const std::size_t gap = n < lo ? lo - n : n > hi ? n - hi : 0;
        if (gap < best_gap) {
          best_gap = gap;
          best = c;
        }
      }
    }
  }
  s.signature = best;
  s.op = signature(best).op;
  s.host_omitted = best_omit;
}

ParseResult parse_program(std::string_view source, std::optional<ArgStyle> style_hint) {
  ParseResult r;
  auto tokens = tokenize(source, r.diagnostics);
  r.program = Parser(std::move(tokens), r.diagnostics, style_hint).run();
  return r;
}

}  // namespace mbl::dsl
