#pragma once

#include "eps0/cnf.hpp"
#include "eps0/convert.hpp"
#include "eps0/mset.hpp"

// Ordinal arithmetic. Ordinary addition and multiplication live on the CNF
// representation, where comparing heads drives the algorithms; the
// commutative Hessenberg sum and product live on hereditary multisets,
// where order plays no role. Each operation also exists on the opposite
// representation as the conversion-composed ("transported") variant.

namespace eps0 {

// Ordinal sum. Not commutative: 1 + w == w but w + 1 > w. Summands of a
// whose exponents sit below the head of b are absorbed (w^b is additive
// principal).
CnfOrdinal add(const CnfOrdinal& a, const CnfOrdinal& b);

// Ordinal product. Not commutative: 2 * w == w but w * 2 == w + w.
CnfOrdinal mul(const CnfOrdinal& a, const CnfOrdinal& b);

// Hessenberg (natural) sum: multiset union. Commutative and associative
// with unit 0.
HMultiset hsum(const HMultiset& a, const HMultiset& b);

// Every exponent of a replaced by its Hessenberg sum with b.
HMultiset dot_plus(const HMultiset& a, const HMultiset& b);

// Hessenberg (natural) product: pairwise sums of exponents.
HMultiset hmul(const HMultiset& a, const HMultiset& b);

// Transported variants: the same operations carried across the
// conversions to the other representation.
CnfOrdinal hsum_cnf(const CnfOrdinal& a, const CnfOrdinal& b);
CnfOrdinal hmul_cnf(const CnfOrdinal& a, const CnfOrdinal& b);
HMultiset add_mset(const HMultiset& a, const HMultiset& b);
HMultiset mul_mset(const HMultiset& a, const HMultiset& b);

}  // namespace eps0
