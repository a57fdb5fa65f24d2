#include "eps0/arith.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace eps0 {

CnfOrdinal add(const CnfOrdinal& a, const CnfOrdinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const CnfOrdinal& head = b.exp();
  // Keep the summands of a whose exponent is >= head; the rest of a is
  // absorbed by w^head.
  std::vector<const CnfOrdinal*> kept;
  for (const CnfOrdinal* cur = &a; !cur->is_zero(); cur = &cur->rest()) {
    if (lt(cur->exp(), head)) break;
    kept.push_back(&cur->exp());
  }
  CnfOrdinal acc = b;
  for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
    // The guard cannot fail here: kept exponents are non-increasing and
    // all >= head (this is the ">=fst" preservation argument).
    acc = omega_plus(**it, acc);
  }
  assert(audit(acc));
  return acc;
}

CnfOrdinal mul(const CnfOrdinal& a, const CnfOrdinal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<const CnfOrdinal*> betas;
  for (const CnfOrdinal* cur = &b; !cur->is_zero(); cur = &cur->rest())
    betas.push_back(&cur->exp());
  const CnfOrdinal& a_head = a.exp();
  CnfOrdinal acc;
  for (auto it = betas.rbegin(); it != betas.rend(); ++it) {
    const CnfOrdinal& beta = **it;
    if (beta.is_zero()) {
      acc = add(a, acc);  // a * (w^0 + d) = a + a * d; matched first
    } else {
      acc = omega_plus(add(a_head, beta), acc);  // w^(head(a) + beta) + a * d
    }
  }
  assert(audit(acc));
  return acc;
}

HMultiset hsum(const HMultiset& a, const HMultiset& b) {
  // Linear merge of the sorted child sequences; equals folding mset_cons
  // over either argument (a tested property).
  auto ka = a.children();
  auto kb = b.children();
  std::vector<HMultiset> merged;
  merged.reserve(ka.size() + kb.size());
  std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(merged),
             [](const HMultiset& x, const HMultiset& y) {
               return mset_compare(x, y) == Ordering3::Greater;
             });
  return HMultiset::from_sorted(std::move(merged));
}

HMultiset dot_plus(const HMultiset& a, const HMultiset& b) {
  std::vector<HMultiset> kids;
  kids.reserve(a.children().size());
  for (const HMultiset& e : a.children()) kids.push_back(hsum(e, b));
  return HMultiset::of(std::move(kids));
}

HMultiset hmul(const HMultiset& a, const HMultiset& b) {
  HMultiset acc;
  for (const HMultiset& e : b.children()) acc = hsum(dot_plus(a, e), acc);
  return acc;
}

CnfOrdinal hsum_cnf(const CnfOrdinal& a, const CnfOrdinal& b) {
  return h2m(hsum(m2h(a), m2h(b)));
}

CnfOrdinal hmul_cnf(const CnfOrdinal& a, const CnfOrdinal& b) {
  return h2m(hmul(m2h(a), m2h(b)));
}

HMultiset add_mset(const HMultiset& a, const HMultiset& b) {
  return m2h(add(h2m(a), h2m(b)));
}

HMultiset mul_mset(const HMultiset& a, const HMultiset& b) {
  return m2h(mul(h2m(a), h2m(b)));
}

}  // namespace eps0
