#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "formula.hpp"
#include "vocabulary.hpp"

namespace ibr {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : std::runtime_error("syntax error at position " + std::to_string(position) +
                           ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class UnknownAtomError : public std::runtime_error {
 public:
  UnknownAtomError(std::size_t position, std::string name)
      : std::runtime_error("unknown atom '" + name + "' at position " + std::to_string(position)),
        position_(position),
        name_(std::move(name)) {}

  std::size_t position() const { return position_; }
  const std::string& name() const { return name_; }

 private:
  std::size_t position_;
  std::string name_;
};

namespace detail {

enum class TokKind { Not, And, Or, Implies, Iff, Top, Bottom, Ident, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::size_t pos;  // byte offset into the input
  std::string text;
};

// Tokens: ~ ! ¬ | & ∧ | "|" ∨ | -> → | <-> ↔ | T ⊤ true | F ⊥ false |
// parentheses | identifiers.
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](TokKind k, std::size_t pos, std::size_t len) {
    out.push_back({k, pos, std::string(text.substr(pos, len))});
  };
  auto starts_with = [&](std::string_view prefix) {
    return text.substr(i, prefix.size()) == prefix;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '~' || c == '!') {
      push(TokKind::Not, i, 1);
      ++i;
    } else if (c == '&') {
      push(TokKind::And, i, 1);
      ++i;
    } else if (c == '|') {
      push(TokKind::Or, i, 1);
      ++i;
    } else if (c == '(') {
      push(TokKind::LParen, i, 1);
      ++i;
    } else if (c == ')') {
      push(TokKind::RParen, i, 1);
      ++i;
    } else if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        push(TokKind::Implies, i, 2);
        i += 2;
      } else {
        throw SyntaxError(i, "'->'");
      }
    } else if (c == '<') {
      if (starts_with("<->")) {
        push(TokKind::Iff, i, 3);
        i += 3;
      } else {
        throw SyntaxError(i, "'<->'");
      }
    } else if (starts_with("\xC2\xAC")) {  // ¬
      push(TokKind::Not, i, 2);
      i += 2;
    } else if (starts_with("\xE2\x88\xA7")) {  // ∧
      push(TokKind::And, i, 3);
      i += 3;
    } else if (starts_with("\xE2\x88\xA8")) {  // ∨
      push(TokKind::Or, i, 3);
      i += 3;
    } else if (starts_with("\xE2\x86\x92")) {  // →
      push(TokKind::Implies, i, 3);
      i += 3;
    } else if (starts_with("\xE2\x86\x94")) {  // ↔
      push(TokKind::Iff, i, 3);
      i += 3;
    } else if (starts_with("\xE2\x8A\xA4")) {  // ⊤
      push(TokKind::Top, i, 3);
      i += 3;
    } else if (starts_with("\xE2\x8A\xA5")) {  // ⊥
      push(TokKind::Bottom, i, 3);
      i += 3;
    } else if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             ((text[i] >= 'A' && text[i] <= 'Z') || (text[i] >= 'a' && text[i] <= 'z') ||
              (text[i] >= '0' && text[i] <= '9') || text[i] == '_'))
        ++i;
      std::string_view word = text.substr(start, i - start);
      if (word == "T" || word == "true")
        push(TokKind::Top, start, word.size());
      else if (word == "F" || word == "false")
        push(TokKind::Bottom, start, word.size());
      else
        push(TokKind::Ident, start, word.size());
    } else {
      throw SyntaxError(i, "a formula token");
    }
  }
  out.push_back({TokKind::End, text.size(), ""});
  return out;
}

// Grammar, loosest to tightest binding; -> and <-> associate to the right:
//   iff     := implies ('<->' iff)?
//   implies := or ('->' implies)?
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '~' unary | primary
//   primary := 'T' | 'F' | atom | '(' iff ')'
class Parser {
 public:
  Parser(std::vector<Token> tokens, const Vocabulary& vocab)
      : tokens_(std::move(tokens)), vocab_(vocab) {}

  Formula run() {
    Formula f = parse_iff();
    if (peek().kind != TokKind::End)
      throw SyntaxError(peek().pos, "end of input or a connective");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }
  bool accept(TokKind k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (accept(TokKind::Iff)) return Formula::biconditional(lhs, parse_iff());
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (accept(TokKind::Implies)) return Formula::implication(lhs, parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(TokKind::Or)) f = Formula::disjunction(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(TokKind::And)) f = Formula::conjunction(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept(TokKind::Not)) return Formula::negation(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Top:
        take();
        return Formula::top();
      case TokKind::Bottom:
        take();
        return Formula::bottom();
      case TokKind::Ident: {
        Token tok = take();
        if (auto idx = vocab_.index_of(tok.text)) return Formula::atom(*idx);
        throw UnknownAtomError(tok.pos, tok.text);
      }
      case TokKind::LParen: {
        take();
        Formula f = parse_iff();
        if (!accept(TokKind::RParen)) throw SyntaxError(peek().pos, "')'");
        return f;
      }
      default:
        throw SyntaxError(t.pos, "an atom, 'T', 'F', '~', or '('");
    }
  }

  std::vector<Token> tokens_;
  const Vocabulary& vocab_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text, const Vocabulary& vocab) {
  return detail::Parser(detail::tokenize(text), vocab).run();
}

}  // namespace ibr
