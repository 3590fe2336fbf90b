// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/dsl/lexer.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace mbl::dsl {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  Lexer(std::string_view src, std::vector<Diagnostic>& diags) : src_(src), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    bool brk = true;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        advance();
        brk = true;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      if (c == '\\' && peek(1) == 'n') {
        advance();
        advance();
        brk = true;
        continue;
      }
      const SourceSpan at{line_, col_};
      if (c == '/' && (peek(1) == '/' || peek(1) == '*')) {
        error(at, "comments are not part of the layout language");
        skip_comment();
        continue;
      }
      Token t;
      t.span = at;
      t.line_break_before = brk;
      brk = false;
      if (ident_start(c)) {
        while (pos_ < src_.size() && ident_char(src_[pos_])) t.lexeme += advance();
        t.kind = (t.lexeme == "new" || t.lexeme == "true" || t.lexeme == "false") ? TokenKind::Keyword
                                                                                  : TokenKind::Identifier;
      } else if (digit(c) || (c == '.' && digit(peek(1)))) {
        if (!lex_number(t)) continue;
      } else if (c == '"') {
        if (!lex_text(t)) continue;
      } else if (std::string_view("(){}[]<>,;:.=-").find(c) != std::string_view::npos) {
        t.kind = TokenKind::Punctuation;
        t.lexeme = std::string(1, advance());
      } else {
        error(at, std::string("unexpected character '") + c + "'");
        advance();
        brk = t.line_break_before;
        continue;
      }
      out.push_back(std::move(t));
    }
    Token end;
    end.kind = TokenKind::End;
    end.span = {line_, col_};
    end.line_break_before = true;
    out.push_back(end);
    return out;
  }

 private:
  char peek(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++col_;
    }
    return c;
  }

  void error(SourceSpan at, std::string msg) {
    diags_.push_back({Severity::Error, DiagCategory::Syntax, std::move(msg), at, kNoStatement});
  }

  void skip_comment() {
    if (peek(1) == '/') {
      while (pos_ < src_.size() && src_[pos_] != '\n' && !(src_[pos_] == '\\' && peek(1) == 'n')) advance();
      return;
    }
    advance();
    advance();
    while (pos_ < src_.size() && !(src_[pos_] == '*' && peek(1) == '/')) advance();
    if (pos_ < src_.size()) {
      advance();
      advance();
    }
  }

  bool lex_number(Token& t) {
    const std::size_t start = pos_;
    while (digit(peek(0))) advance();
    if (peek(0) == '.' && digit(peek(1))) {
      advance();
      while (digit(peek(0))) advance();
    }
    if ((peek(0) == 'e' || peek(0) == 'E') &&
        (digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && digit(peek(2))))) {
      advance();
      if (peek(0) == '+' || peek(0) == '-') advance();
      while (digit(peek(0))) advance();
    }
    // C# literal suffixes: 5800d, 0.5f, 2000m
    if (peek(0) == 'd' || peek(0) == 'D' || peek(0) == 'f' || peek(0) == 'F' || peek(0) == 'm' ||
        peek(0) == 'M') {
      if (!ident_char(peek(1))) advance();
    }
    std::string_view text = src_.substr(start, pos_ - start);
    while (!text.empty() && std::isalpha(static_cast<unsigned char>(text.back())) &&
           text.back() != 'e' && text.back() != 'E') {
      text.remove_suffix(1);
    }
    t.lexeme = std::string(text);
    std::string digits(text.front() == '.' ? "0" + t.lexeme : t.lexeme);
    const auto r = std::from_chars(digits.data(), digits.data() + digits.size(), t.number);
    if (r.ec != std::errc() || !std::isfinite(t.number)) {
      error(t.span, "number out of range: " + t.lexeme);
      return false;
    }
    if (ident_char(peek(0))) {
      error(t.span, "malformed number near '" + t.lexeme + "'");
      while (ident_char(peek(0))) advance();
      return false;
    }
    t.kind = TokenKind::Number;
    return true;
  }

  bool lex_text(Token& t) {
    advance();
    std::string v;
    while (pos_ < src_.size() && src_[pos_] != '"') {
      if (src_[pos_] == '\n') break;
      char c = advance();
      if (c == '\\' && pos_ < src_.size()) {
        const char e = advance();
        switch (e) {
          case 'n': c = '\n'; break;
          case 't': c = '\t'; break;
          case '"': c = '"'; break;
          case '\\': c = '\\'; break;
          default:
            v += '\\';
            c = e;
        }
      }
      v += c;
    }
    if (pos_ >= src_.size() || src_[pos_] != '"') {
      error(t.span, "unterminated string literal");
      return false;
    }
    advance();
    t.kind = TokenKind::Text;
    t.lexeme = std::move(v);
    return true;
  }

  std::string_view src_;
  std::vector<Diagnostic>& diags_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source, std::vector<Diagnostic>& diags) {
  return Lexer(source, diags).run();
}

}  // namespace mbl::dsl
