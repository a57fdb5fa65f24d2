#include "eps0/oracle.hpp"

namespace eps0 {

namespace {

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw CoefficientOverflow();
  return r;
}

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw CoefficientOverflow();
  return r;
}

// The exponent of a finite ordinal is a numeral: a chain of w^0 summands.
std::uint64_t finite_value(const CnfOrdinal& e) {
  std::uint64_t n = 0;
  for (const CnfOrdinal* cur = &e; !cur->is_zero(); cur = &cur->rest()) {
    if (!cur->exp().is_zero()) throw OutOfRange("exponent is not a finite ordinal");
    ++n;
  }
  return n;
}

}  // namespace

CoeffVector cnf_to_cv(const CnfOrdinal& a) {
  CoeffVector v;
  for (const CnfOrdinal* cur = &a; !cur->is_zero(); cur = &cur->rest()) {
    std::uint64_t degree = finite_value(cur->exp());
    v.coeffs[degree] = checked_add(v.coeffs[degree], 1);
  }
  return v;
}

CnfOrdinal cv_to_cnf(const CoeffVector& v) {
  CnfOrdinal acc;
  for (const auto& [degree, coeff] : v.coeffs) {  // ascending degree = right to left
    CnfOrdinal e = from_nat(degree);
    for (std::uint64_t i = 0; i < coeff; ++i) acc = omega_plus(e, acc);
  }
  return acc;
}

CoeffVector cv_add(const CoeffVector& a, const CoeffVector& b) {
  if (b.coeffs.empty()) return a;
  std::uint64_t j = b.coeffs.rbegin()->first;  // leading degree of b
  CoeffVector r = b;                           // everything at or below j
  r.coeffs[j] = checked_add(r.coeffs[j], a.coeffs.count(j) ? a.coeffs.at(j) : 0);
  for (auto it = a.coeffs.upper_bound(j); it != a.coeffs.end(); ++it)
    r.coeffs[it->first] = it->second;          // degrees of a above j survive
  return r;
}

CoeffVector cv_mul(const CoeffVector& a, const CoeffVector& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  std::uint64_t k = a.coeffs.rbegin()->first;  // leading degree of a
  CoeffVector acc;
  // Left distributivity over b's monomials, highest degree first.
  for (auto it = b.coeffs.rbegin(); it != b.coeffs.rend(); ++it) {
    auto [j, c] = *it;
    CoeffVector term;
    if (j >= 1) {
      term.coeffs[checked_add(k, j)] = c;  // a * w^j = w^(k+j), times c
    } else {
      term = a;                            // a * n: leading coefficient scales
      term.coeffs[k] = checked_mul(term.coeffs[k], c);
    }
    acc = cv_add(acc, term);
  }
  return acc;
}

CoeffVector cv_hsum(const CoeffVector& a, const CoeffVector& b) {
  CoeffVector r = a;
  for (const auto& [degree, coeff] : b.coeffs)
    r.coeffs[degree] = checked_add(r.coeffs[degree], coeff);
  return r;
}

CoeffVector cv_hmul(const CoeffVector& a, const CoeffVector& b) {
  CoeffVector r;
  for (const auto& [i, ci] : a.coeffs)
    for (const auto& [j, cj] : b.coeffs) {
      std::uint64_t degree = checked_add(i, j);
      r.coeffs[degree] = checked_add(r.coeffs[degree], checked_mul(ci, cj));
    }
  return r;
}

}  // namespace eps0
