#include "doctest.h"

#include <algorithm>

#include "eps0/convert.hpp"
#include "eps0/io.hpp"
#include "eps0/mset.hpp"
#include "support/generators.hpp"

using namespace eps0;

TEST_CASE("mset_cons basics") {
  HMultiset empty;
  HMultiset singleton_zero = mset_cons({}, {});
  CHECK(singleton_zero.children().size() == 1);
  CHECK(singleton_zero.children()[0].is_empty());

  testgen::Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    HMultiset a = testgen::random_mset(rng, 3);
    HMultiset b = testgen::random_mset(rng, 3);
    HMultiset c = testgen::random_mset(rng, 3);
    CHECK(mset_cons(a, mset_cons(b, c)) == mset_cons(b, mset_cons(a, c)));  // swap law
  }
}

TEST_CASE("three-element insertion order is irrelevant") {
  testgen::Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    HMultiset a = testgen::random_mset(rng, 3);
    HMultiset b = testgen::random_mset(rng, 3);
    HMultiset c = testgen::random_mset(rng, 3);
    HMultiset fwd = mset_cons(a, mset_cons(b, mset_cons(c, {})));
    HMultiset rev = mset_cons(c, mset_cons(b, mset_cons(a, {})));
    CHECK(fwd == rev);
  }
}

TEST_CASE("cons from empty is permutation-independent") {
  testgen::Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    std::vector<HMultiset> elems;
    for (int k = 0; k < 5; ++k) elems.push_back(testgen::random_mset(rng, 2));
    HMultiset first;
    for (const auto& e : elems) first = mset_cons(e, first);
    std::shuffle(elems.begin(), elems.end(), rng);
    HMultiset second;
    for (const auto& e : elems) second = mset_cons(e, second);
    CHECK(first == second);
  }
}

TEST_CASE("mset_decompose") {
  CHECK(!mset_decompose({}).has_value());

  testgen::Rng rng(24);
  for (int i = 0; i < 300; ++i) {
    HMultiset a = testgen::random_mset(rng, 3);
    auto d = mset_decompose(mset_cons(a, {}));
    REQUIRE(d.has_value());
    CHECK(d->first == a);
    CHECK(d->second.is_empty());

    HMultiset x = testgen::random_mset(rng, 3);
    if (auto dx = mset_decompose(x)) CHECK(mset_cons(dx->first, dx->second) == x);
  }

  // w+1 decomposes into its largest exponent and the rest
  auto d = mset_decompose(m2h(omega_plus(one(), one())));
  REQUIRE(d.has_value());
  CHECK(d->first == m2h(one()));
  CHECK(d->second == mset_cons(m2h(zero()), {}));
}

TEST_CASE("mset_fold") {
  auto count = [](std::size_t, std::size_t acc) { return acc + 1; };
  CHECK(mset_fold<std::size_t>(0, count, {}) == 0);

  HMultiset three = mset_cons({}, mset_cons(m2h(one()), mset_cons(m2h(omega()), {})));
  CHECK(mset_fold<std::size_t>(0, count, three) == 3);  // top-level cardinality

  // folding with insert is exactly h2m
  testgen::Rng rng(25);
  for (int i = 0; i < 300; ++i) {
    HMultiset x = testgen::random_mset(rng, 4);
    auto ins = [](const CnfOrdinal& a, const CnfOrdinal& b) { return insert(a, b); };
    CHECK(mset_fold<CnfOrdinal>({}, ins, x) == h2m(x));
  }
}

TEST_CASE("fold fusion: cons rebuilds the identity") {
  testgen::Rng rng(26);
  for (int i = 0; i < 300; ++i) {
    HMultiset x = testgen::random_mset(rng, 4);
    auto cons = [](const HMultiset& a, const HMultiset& b) { return mset_cons(a, b); };
    CHECK(mset_fold<HMultiset>({}, cons, x) == x);
  }
}

TEST_CASE("mset equality is quotient equality") {
  testgen::Rng rng(27);
  for (int i = 0; i < 500; ++i) {
    HMultiset x = testgen::random_mset(rng, 4);
    CHECK(mset_eq(x, x));
    CnfOrdinal a = testgen::random_cnf(rng, 4);
    CnfOrdinal b = testgen::random_cnf(rng, 4);
    CHECK(mset_eq(m2h(a), m2h(b)) == (a == b));  // m2h is injective
  }
}

TEST_CASE("induced order agrees with lexicographic comparison") {
  testgen::Rng rng(28);
  for (int i = 0; i < 1000; ++i) {
    CnfOrdinal a = testgen::random_cnf(rng, 4);
    CnfOrdinal b = testgen::random_cnf(rng, 4);
    CHECK(mset_compare(m2h(a), m2h(b)) == compare3(a, b));
  }
}

TEST_CASE("left_commutative_on helper") {
  testgen::Rng rng(29);
  std::vector<std::array<CnfOrdinal, 3>> triples;
  for (int i = 0; i < 100; ++i)
    triples.push_back({testgen::random_cnf(rng, 3), testgen::random_cnf(rng, 3),
                       testgen::random_cnf(rng, 3)});

  auto ins = [](const CnfOrdinal& a, const CnfOrdinal& b) { return insert(a, b); };
  CHECK(left_commutative_on<CnfOrdinal>(ins, triples));

  // a projection is not left-commutative, and the helper notices
  auto first = [](const CnfOrdinal& a, const CnfOrdinal&) { return a; };
  CHECK_FALSE(left_commutative_on<CnfOrdinal>(first, triples));
}
