#pragma once

#include <array>
#include <cassert>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eps0/errors.hpp"
#include "eps0/ordering.hpp"

// Canonical finite hereditary multisets. An ordinal is the multiset of the
// exponents of its Cantor normal form; permuted exponents denote the same
// ordinal, so each equivalence class is stored by one canonical
// representative: children sorted non-increasing, hereditarily. Structural
// equality of canonical forms is then exactly quotient equality.

namespace eps0 {

class HMultiset {
 public:
  HMultiset() = default;  // the empty multiset, i.e. the ordinal 0

  // Canonicalizes: the children end up sorted non-increasing.
  static HMultiset of(std::vector<HMultiset> children);

  bool is_empty() const { return !children_ || children_->empty(); }

  std::span<const HMultiset> children() const {
    if (!children_) return {};
    return {children_->data(), children_->size()};
  }

  bool identical_to(const HMultiset& other) const { return children_ == other.children_; }

  friend bool operator==(const HMultiset& a, const HMultiset& b);
  friend bool operator!=(const HMultiset& a, const HMultiset& b) { return !(a == b); }

 private:
  explicit HMultiset(std::shared_ptr<const std::vector<HMultiset>> c)
      : children_(std::move(c)) {}
  std::shared_ptr<const std::vector<HMultiset>> children_;

  // Trusted: the caller guarantees the vector is already sorted
  // non-increasing (checked by a debug assertion).
  static HMultiset from_sorted(std::vector<HMultiset> children);

  friend HMultiset mset_cons(const HMultiset& a, const HMultiset& b);
  friend HMultiset hsum(const HMultiset& a, const HMultiset& b);
  friend std::optional<std::pair<HMultiset, HMultiset>> mset_decompose(const HMultiset& x);
};

// Order on canonical forms: top-down lexicographic comparison of the
// sorted child sequences, children compared recursively, a proper prefix
// below its extensions. Agrees with the CNF order through the
// conversions (a tested property, not an assumption).
Ordering3 mset_compare(const HMultiset& a, const HMultiset& b);
bool mset_lt(const HMultiset& a, const HMultiset& b);

inline bool mset_eq(const HMultiset& a, const HMultiset& b) { return a == b; }

// One more copy of `a` added to the multiset `b`; insertion order never
// matters: cons(a, cons(b, c)) == cons(b, cons(a, c)).
HMultiset mset_cons(const HMultiset& a, const HMultiset& b);

// Largest element and the rest; nullopt on the empty multiset.
// mset_cons(head, tail) rebuilds the input.
std::optional<std::pair<HMultiset, HMultiset>> mset_decompose(const HMultiset& x);

// Hereditary fold: fold(empty) = z, fold(cons(a, b)) = star(fold(a),
// fold(b)). The result is representative-independent only when star is
// left-commutative, star(x, star(y, z)) == star(y, star(x, z)); that
// contract cannot be checked here (see left_commutative_on below).
template <class T, class Star>
T mset_fold(const T& z, Star&& star, const HMultiset& x) {
  detail::DepthGuard guard;
  T acc = z;
  auto kids = x.children();
  for (auto it = kids.rbegin(); it != kids.rend(); ++it)
    acc = star(mset_fold(z, star, *it), std::move(acc));
  return acc;
}

// Property-test helper for mset_fold's contract: checks the
// left-commutativity law over the supplied triples.
template <class T, class Star>
bool left_commutative_on(Star&& star, const std::vector<std::array<T, 3>>& triples) {
  for (const auto& t : triples)
    if (!(star(t[0], star(t[1], t[2])) == star(t[1], star(t[0], t[2])))) return false;
  return true;
}

}  // namespace eps0
