#include "eps0/convert.hpp"

#include <vector>

namespace eps0 {

namespace {

CnfOrdinal tree_to_cnf(const Tree& t) {
  detail::DepthGuard guard;
  std::vector<const Tree*> exps;
  for (const Tree* cur = &t; !cur->is_zero(); cur = &cur->rest()) exps.push_back(&cur->exp());
  CnfOrdinal acc;
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) acc = omega_plus(tree_to_cnf(**it), acc);
  return acc;
}

Tree cnf_to_tree(const CnfOrdinal& x) {
  detail::DepthGuard guard;
  std::vector<const CnfOrdinal*> exps;
  for (const CnfOrdinal* cur = &x; !cur->is_zero(); cur = &cur->rest()) exps.push_back(&cur->exp());
  Tree acc;
  for (auto it = exps.rbegin(); it != exps.rend(); ++it)
    acc = Tree::omega_plus(cnf_to_tree(**it), acc);
  return acc;
}

}  // namespace

CnfOrdinal t2m(const CnfTree& ct) { return tree_to_cnf(ct.term()); }

CnfTree m2t(const CnfOrdinal& x) { return validate(cnf_to_tree(x)); }

CnfOrdinal insert(const CnfOrdinal& a, const CnfOrdinal& b) {
  // Walk past the exponents of b that dominate a, then place a there.
  std::vector<const CnfOrdinal*> prefix;
  const CnfOrdinal* cur = &b;
  while (!cur->is_zero() && lt(a, cur->exp())) {
    prefix.push_back(&cur->exp());
    cur = &cur->rest();
  }
  CnfOrdinal acc = omega_plus(a, *cur);  // a >= first_exp(*cur) here
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) acc = omega_plus(**it, acc);
  return acc;
}

HMultiset m2h(const CnfOrdinal& x) {
  detail::DepthGuard guard;
  std::vector<HMultiset> kids;
  for (const CnfOrdinal* cur = &x; !cur->is_zero(); cur = &cur->rest())
    kids.push_back(m2h(cur->exp()));
  return HMultiset::of(std::move(kids));
}

CnfOrdinal h2m(const HMultiset& x) {
  return mset_fold<CnfOrdinal>(
      {}, [](const CnfOrdinal& a, const CnfOrdinal& b) { return insert(a, b); }, x);
}

}  // namespace eps0
