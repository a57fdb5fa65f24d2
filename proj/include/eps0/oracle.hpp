#pragma once

#include <cstdint>
#include <map>

#include "eps0/cnf.hpp"

// Independent reference arithmetic for ordinals below w^w, written as
// finitely supported coefficient vectors: {k: c} stands for w^k * c. The
// implementations here deliberately use textbook truncation/distributivity
// identities rather than the head-comparison recursions of the main
// algorithms, so agreement between the two is meaningful evidence.

namespace eps0 {

struct CoeffVector {
  // degree -> coefficient; zero coefficients are never stored.
  std::map<std::uint64_t, std::uint64_t> coeffs;

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

// Counts repetitions of each exponent; every exponent must itself be a
// finite ordinal, else OutOfRange.
CoeffVector cnf_to_cv(const CnfOrdinal& a);

// Inverse of cnf_to_cv on its domain: degrees descending, each exponent
// repeated coefficient-many times.
CnfOrdinal cv_to_cnf(const CoeffVector& v);

CoeffVector cv_add(const CoeffVector& a, const CoeffVector& b);
CoeffVector cv_mul(const CoeffVector& a, const CoeffVector& b);

// Hessenberg: coefficient-wise sum and polynomial convolution.
CoeffVector cv_hsum(const CoeffVector& a, const CoeffVector& b);
CoeffVector cv_hmul(const CoeffVector& a, const CoeffVector& b);

}  // namespace eps0
