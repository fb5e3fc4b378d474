#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include "vocabulary.hpp"
#include "worldset.hpp"

namespace ibr {

// Immutable propositional formula over atom indices. Atom indices are only
// checked against a vocabulary when the formula is evaluated or printed.
class Formula {
 public:
  enum class Kind : std::uint8_t { Top, Bottom, Atom, Not, And, Or, Implies, Iff };

  static Formula top() { return make(Kind::Top, 0, nullptr, nullptr); }
  static Formula bottom() { return make(Kind::Bottom, 0, nullptr, nullptr); }
  static Formula atom(unsigned index) { return make(Kind::Atom, index, nullptr, nullptr); }
  static Formula negation(const Formula& f) { return make(Kind::Not, 0, f.node_, nullptr); }
  static Formula conjunction(const Formula& l, const Formula& r) {
    return make(Kind::And, 0, l.node_, r.node_);
  }
  static Formula disjunction(const Formula& l, const Formula& r) {
    return make(Kind::Or, 0, l.node_, r.node_);
  }
  static Formula implication(const Formula& l, const Formula& r) {
    return make(Kind::Implies, 0, l.node_, r.node_);
  }
  static Formula biconditional(const Formula& l, const Formula& r) {
    return make(Kind::Iff, 0, l.node_, r.node_);
  }

  Kind kind() const { return node_->kind; }

  unsigned atom_index() const {
    if (kind() != Kind::Atom) throw std::logic_error("Formula: not an atom");
    return node_->atom;
  }

  Formula left() const {
    if (!node_->lhs) throw std::logic_error("Formula: node has no operand");
    return Formula(node_->lhs);
  }

  Formula right() const {
    if (!node_->rhs) throw std::logic_error("Formula: node has no right operand");
    return Formula(node_->rhs);
  }

  // Structural equality.
  friend bool operator==(const Formula& a, const Formula& b) { return equal(a.node_.get(), b.node_.get()); }

 private:
  struct Node {
    Kind kind;
    unsigned atom;
    std::shared_ptr<const Node> lhs, rhs;
  };
  using NodePtr = std::shared_ptr<const Node>;

  explicit Formula(NodePtr node) : node_(std::move(node)) {}

  static Formula make(Kind k, unsigned atom, NodePtr l, NodePtr r) {
    return Formula(std::make_shared<const Node>(Node{k, atom, std::move(l), std::move(r)}));
  }

  static bool equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->atom != b->atom) return false;
    return equal(a->lhs.get(), b->lhs.get()) && equal(a->rhs.get(), b->rhs.get());
  }

  NodePtr node_;
};

// Truth-table mask of atom j over 64 worlds: bit i is set iff bit j of i is.
inline constexpr std::array<std::uint64_t, kMaxAtoms> kAtomPattern = {
    0xAAAA'AAAA'AAAA'AAAAULL, 0xCCCC'CCCC'CCCC'CCCCULL, 0xF0F0'F0F0'F0F0'F0F0ULL,
    0xFF00'FF00'FF00'FF00ULL, 0xFFFF'0000'FFFF'0000ULL, 0xFFFF'FFFF'0000'0000ULL,
};

inline std::uint64_t models_mask(const Formula& f, unsigned n) {
  const std::uint64_t u = universe_mask(n);
  using Kind = Formula::Kind;
  switch (f.kind()) {
    case Kind::Top: return u;
    case Kind::Bottom: return 0;
    case Kind::Atom:
      if (f.atom_index() >= n) throw std::out_of_range("models: atom index exceeds vocabulary");
      return kAtomPattern[f.atom_index()] & u;
    case Kind::Not: return ~models_mask(f.left(), n) & u;
    case Kind::And: return models_mask(f.left(), n) & models_mask(f.right(), n);
    case Kind::Or: return models_mask(f.left(), n) | models_mask(f.right(), n);
    case Kind::Implies: return (~models_mask(f.left(), n) & u) | models_mask(f.right(), n);
    case Kind::Iff: return ~(models_mask(f.left(), n) ^ models_mask(f.right(), n)) & u;
  }
  throw std::logic_error("models: corrupt formula node");
}

// Semantic denotation of f: the set of worlds satisfying it.
inline WorldSet models(const Formula& f, const Vocabulary& vocab) {
  return {models_mask(f, vocab.size()), vocab.size()};
}

namespace detail {

inline int precedence(Formula::Kind k) {
  using Kind = Formula::Kind;
  switch (k) {
    case Kind::Iff: return 1;
    case Kind::Implies: return 2;
    case Kind::Or: return 3;
    case Kind::And: return 4;
    case Kind::Not: return 5;
    default: return 6;  // atoms and constants
  }
}

inline void print_into(std::string& out, const Formula& f, const Vocabulary& vocab, int min_prec) {
  using Kind = Formula::Kind;
  const Kind k = f.kind();
  const int prec = precedence(k);
  const bool wrap = prec < min_prec;
  if (wrap) out += '(';
  switch (k) {
    case Kind::Top: out += 'T'; break;
    case Kind::Bottom: out += 'F'; break;
    case Kind::Atom: out += vocab.name(f.atom_index()); break;
    case Kind::Not:
      out += '~';
      print_into(out, f.left(), vocab, prec);
      break;
    case Kind::And:
    case Kind::Or: {
      // left-associative: an equal-precedence right child keeps its parens
      print_into(out, f.left(), vocab, prec);
      out += (k == Kind::And) ? " & " : " | ";
      print_into(out, f.right(), vocab, prec + 1);
      break;
    }
    case Kind::Implies:
    case Kind::Iff: {
      // right-associative
      print_into(out, f.left(), vocab, prec + 1);
      out += (k == Kind::Implies) ? " -> " : " <-> ";
      print_into(out, f.right(), vocab, prec);
      break;
    }
  }
  if (wrap) out += ')';
}

}  // namespace detail

// Re-parseable rendering with minimal parentheses.
inline std::string pretty_print(const Formula& f, const Vocabulary& vocab) {
  std::string out;
  detail::print_into(out, f, vocab, 0);
  return out;
}

}  // namespace ibr
