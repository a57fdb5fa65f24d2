#pragma once

#include "eps0/cnf.hpp"
#include "eps0/mset.hpp"
#include "eps0/tree.hpp"

// Conversions between the three representations. All four maps are total:
// the source invariants discharge every target guard, and each pair forms
// an isomorphism (round trips are identities, exercised heavily in tests).

namespace eps0 {

// Validated tree -> CNF ordinal. The CnfTree invariant guarantees that
// every omega_plus guard below holds.
CnfOrdinal t2m(const CnfTree& ct);

// CNF ordinal -> tree, erasing nothing but the (unstored) witnesses; the
// result always validates.
CnfTree m2t(const CnfOrdinal& x);

// b viewed as a descending list of exponents with one more exponent a put
// at its ordered position. insert(a, b) == omega_plus(a, b) whenever
// a >= first_exp(b), and insert satisfies the swap law.
CnfOrdinal insert(const CnfOrdinal& a, const CnfOrdinal& b);

// CNF ordinal -> hereditary multiset of its exponents. Already canonical:
// CNF exponent lists are non-increasing.
HMultiset m2h(const CnfOrdinal& x);

// Hereditary multiset -> CNF ordinal: the hereditary fold of insert.
CnfOrdinal h2m(const HMultiset& x);

}  // namespace eps0
