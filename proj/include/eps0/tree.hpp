#pragma once

#include <cassert>
#include <memory>

#include "eps0/errors.hpp"

// Free ordinal terms: binary trees where the leaf is 0 and an inner node
// reads "w^exp + rest". Nothing stops a Tree from violating Cantor normal
// form; is_cnf / validate recover the well-behaved subset.

namespace eps0 {

class Tree {
 public:
  Tree() = default;  // the term 0

  static Tree omega_plus(const Tree& exp, const Tree& rest);

  bool is_zero() const { return node_ == nullptr; }

  // Precondition: !is_zero().
  const Tree& exp() const;
  const Tree& rest() const;

  // Same heap node; implies structural equality.
  bool identical_to(const Tree& other) const { return node_ == other.node_; }

  friend bool operator==(const Tree& a, const Tree& b);
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Tree::Node {
  Tree exp;
  Tree rest;
  ~Node();
};

inline Tree Tree::omega_plus(const Tree& exp, const Tree& rest) {
  return Tree(std::make_shared<Node>(Node{exp, rest}));
}

inline const Tree& Tree::exp() const {
  assert(node_);
  return node_->exp;
}

inline const Tree& Tree::rest() const {
  assert(node_);
  return node_->rest;
}

// First exponent; by convention fst(0) = 0.
const Tree& tree_fst(const Tree& a);

// Lexicographic strict order: 0 below every inner node; inner nodes by
// exponent first, then by rest.
bool tree_lt(const Tree& a, const Tree& b);

// Cantor normal form: every exponent is itself in normal form and is >=
// the first exponent of its rest, hereditarily.
bool is_cnf(const Tree& a);

// A Tree that passed validate(); structurally identical to its input.
// Only validate (and m2t, which produces normal forms by construction)
// can create one.
class CnfTree {
 public:
  const Tree& term() const { return term_; }

  friend bool operator==(const CnfTree& a, const CnfTree& b) { return a.term_ == b.term_; }
  friend bool operator!=(const CnfTree& a, const CnfTree& b) { return !(a == b); }

 private:
  explicit CnfTree(Tree t) : term_(std::move(t)) {}
  Tree term_;
  friend CnfTree validate(const Tree& a);
};

// Checks is_cnf and wraps; throws NotInNormalForm naming the offending
// subterm with a path like "/rest/exp".
CnfTree validate(const Tree& a);

}  // namespace eps0
