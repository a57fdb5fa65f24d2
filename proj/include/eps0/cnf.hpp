#pragma once

#include <cassert>
#include <cstdint>
#include <memory>

#include "eps0/errors.hpp"
#include "eps0/ordering.hpp"

// Ordinals below epsilon_0 as Cantor-normal-form terms. The constructor
// guard "exponent >= first exponent of the rest" is re-derived on every
// omega_plus, so a CnfOrdinal can only ever hold a normal-form term; no
// separate witness is stored.

namespace eps0 {

class CnfOrdinal {
 public:
  CnfOrdinal() = default;  // 0

  bool is_zero() const { return node_ == nullptr; }

  // Precondition: !is_zero().
  const CnfOrdinal& exp() const;
  const CnfOrdinal& rest() const;

  // Same heap node; implies equality. Used as a fast path by compare3.
  bool identical_to(const CnfOrdinal& other) const { return node_ == other.node_; }

  friend bool operator==(const CnfOrdinal& a, const CnfOrdinal& b);
  friend bool operator!=(const CnfOrdinal& a, const CnfOrdinal& b) { return !(a == b); }

 private:
  struct Node;
  explicit CnfOrdinal(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend CnfOrdinal omega_plus(const CnfOrdinal& e, const CnfOrdinal& r);
};

struct CnfOrdinal::Node {
  CnfOrdinal exp;
  CnfOrdinal rest;
  ~Node();
};

inline const CnfOrdinal& CnfOrdinal::exp() const {
  assert(node_);
  return node_->exp;
}

inline const CnfOrdinal& CnfOrdinal::rest() const {
  assert(node_);
  return node_->rest;
}

// Decidable total order; Equal coincides with structural equality (order
// witnesses are erased, so structural equality is term equality).
Ordering3 compare3(const CnfOrdinal& a, const CnfOrdinal& b);

bool lt(const CnfOrdinal& a, const CnfOrdinal& b);
bool leq(const CnfOrdinal& a, const CnfOrdinal& b);
bool gt(const CnfOrdinal& a, const CnfOrdinal& b);
bool geq(const CnfOrdinal& a, const CnfOrdinal& b);

inline bool operator<(const CnfOrdinal& a, const CnfOrdinal& b) { return lt(a, b); }
inline bool operator<=(const CnfOrdinal& a, const CnfOrdinal& b) { return leq(a, b); }
inline bool operator>(const CnfOrdinal& a, const CnfOrdinal& b) { return gt(a, b); }
inline bool operator>=(const CnfOrdinal& a, const CnfOrdinal& b) { return geq(a, b); }

// First exponent; fst(0) = 0 by convention.
const CnfOrdinal& first_exp(const CnfOrdinal& a);

// The only constructor: w^e + r, allowed iff e >= first_exp(r).
// Throws GuardViolation otherwise.
CnfOrdinal omega_plus(const CnfOrdinal& e, const CnfOrdinal& r);

inline CnfOrdinal zero() { return {}; }
CnfOrdinal omega_pow(const CnfOrdinal& a);  // w^a, always valid (a >= fst 0)
CnfOrdinal one();                           // w^0
CnfOrdinal omega();                         // w^1

// n as the n-fold sum of 1 (CNF has no coefficients, so numerals are
// unary-sized); capped at kNumeralCap, NumeralTooLarge above it.
CnfOrdinal from_nat(std::uint64_t n);

// Audit walk: re-checks the hereditary constructor guard over the whole
// structure. Every reachable value must pass; used by tests and debug
// assertions.
bool audit(const CnfOrdinal& a);

}  // namespace eps0
