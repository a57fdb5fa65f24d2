#include "eps0/cnf.hpp"

namespace eps0 {

CnfOrdinal::Node::~Node() {
  // Same iterative chain release as Tree::Node: numerals make summand
  // chains long, and destruction must not recurse along them.
  auto tail = std::move(rest.node_);
  while (tail && tail.use_count() == 1) {
    std::shared_ptr<const Node> next = std::move(const_cast<Node&>(*tail).rest.node_);
    tail = std::move(next);
  }
}

Ordering3 compare3(const CnfOrdinal& a, const CnfOrdinal& b) {
  detail::DepthGuard guard;
  const CnfOrdinal* x = &a;
  const CnfOrdinal* y = &b;
  for (;;) {
    if (x->identical_to(*y)) return Ordering3::Equal;
    if (x->is_zero()) return Ordering3::Less;     // 0 below every inner node
    if (y->is_zero()) return Ordering3::Greater;
    Ordering3 c = compare3(x->exp(), y->exp());   // exponents first
    if (c != Ordering3::Equal) return c;
    x = &x->rest();                               // then rests
    y = &y->rest();
  }
}

bool operator==(const CnfOrdinal& a, const CnfOrdinal& b) {
  return compare3(a, b) == Ordering3::Equal;
}

bool lt(const CnfOrdinal& a, const CnfOrdinal& b) { return compare3(a, b) == Ordering3::Less; }
bool gt(const CnfOrdinal& a, const CnfOrdinal& b) { return compare3(a, b) == Ordering3::Greater; }
// By trichotomy the non-strict orders are the negated strict ones.
bool leq(const CnfOrdinal& a, const CnfOrdinal& b) { return !gt(a, b); }
bool geq(const CnfOrdinal& a, const CnfOrdinal& b) { return !lt(a, b); }

const CnfOrdinal& first_exp(const CnfOrdinal& a) {
  static const CnfOrdinal zero;
  return a.is_zero() ? zero : a.exp();
}

CnfOrdinal omega_plus(const CnfOrdinal& e, const CnfOrdinal& r) {
  if (lt(e, first_exp(r))) throw GuardViolation();
  return CnfOrdinal(std::make_shared<CnfOrdinal::Node>(CnfOrdinal::Node{e, r}));
}

CnfOrdinal omega_pow(const CnfOrdinal& a) { return omega_plus(a, {}); }

CnfOrdinal one() {
  static const CnfOrdinal v = omega_pow({});
  return v;
}

CnfOrdinal omega() {
  static const CnfOrdinal v = omega_pow(one());
  return v;
}

CnfOrdinal from_nat(std::uint64_t n) {
  if (n > kNumeralCap) throw NumeralTooLarge(kNumeralCap);
  CnfOrdinal acc;
  for (std::uint64_t i = 0; i < n; ++i) acc = omega_plus({}, acc);
  return acc;
}

bool audit(const CnfOrdinal& a) {
  detail::DepthGuard guard;
  for (const CnfOrdinal* cur = &a; !cur->is_zero(); cur = &cur->rest()) {
    if (!audit(cur->exp())) return false;
    if (lt(cur->exp(), first_exp(cur->rest()))) return false;
  }
  return true;
}

}  // namespace eps0
