#include "doctest.h"

#include "eps0/arith.hpp"
#include "eps0/convert.hpp"
#include "eps0/io.hpp"
#include "support/generators.hpp"

using namespace eps0;

TEST_CASE("t2m and m2t on the constants") {
  Tree z;
  CHECK(t2m(validate(z)) == zero());
  Tree w = Tree::omega_plus(Tree::omega_plus(z, z), z);
  CHECK(t2m(validate(w)) == omega());
  CHECK(m2t(zero()).term() == z);
  CHECK(m2t(omega()).term() == w);
}

TEST_CASE("round trips are identities") {
  // exhaustively at small depth
  for (const Tree& t : testgen::all_trees(3)) {
    if (!is_cnf(t)) continue;
    CnfTree ct = validate(t);
    CHECK(m2t(t2m(ct)) == ct);
  }
  for (const CnfOrdinal& x : testgen::all_cnf_ordinals(3)) {
    CHECK(t2m(m2t(x)) == x);
    CHECK(h2m(m2h(x)) == x);
  }

  // and on random terms
  testgen::Rng rng(31);
  for (int i = 0; i < 2000; ++i) {
    CnfOrdinal x = testgen::random_cnf(rng, 6);
    CHECK(t2m(m2t(x)) == x);
    CHECK(h2m(m2h(x)) == x);
    HMultiset h = m2h(testgen::random_cnf(rng, 6));
    CHECK(m2h(h2m(h)) == h);
  }
}

TEST_CASE("conversions preserve and reflect the order") {
  testgen::Rng rng(32);
  for (int i = 0; i < 2000; ++i) {
    CnfOrdinal a = testgen::random_cnf(rng, 5);
    CnfOrdinal b = testgen::random_cnf(rng, 5);
    CHECK(lt(a, b) == tree_lt(m2t(a).term(), m2t(b).term()));
    CHECK(lt(a, b) == mset_lt(m2h(a), m2h(b)));
  }
}

TEST_CASE("insert") {
  testgen::Rng rng(33);
  for (int i = 0; i < 1000; ++i) {
    CnfOrdinal a = testgen::random_cnf(rng, 4);
    CnfOrdinal b = testgen::random_cnf(rng, 4);

    CHECK(insert(a, zero()) == omega_pow(a));
    CHECK(audit(insert(a, b)));  // outputs always satisfy the invariant

    if (geq(a, first_exp(b))) CHECK(insert(a, b) == omega_plus(a, b));
  }

  // inserting 0 into w lands after the w summand
  CHECK(insert(zero(), omega()) == add(omega(), one()));
}

TEST_CASE("insert satisfies the swap law") {
  testgen::Rng rng(34);
  for (int i = 0; i < 1000; ++i) {
    CnfOrdinal x = testgen::random_cnf(rng, 4);
    CnfOrdinal y = testgen::random_cnf(rng, 4);
    CnfOrdinal z = testgen::random_cnf(rng, 4);
    CHECK(insert(x, insert(y, z)) == insert(y, insert(x, z)));
  }
}

TEST_CASE("m2h basics") {
  CHECK(m2h(zero()).is_empty());

  // w+1 becomes the canonical multiset {1, 0}
  HMultiset h = m2h(add(omega(), one()));
  REQUIRE(h.children().size() == 2);
  CHECK(h.children()[0] == m2h(one()));
  CHECK(h.children()[1] == m2h(zero()));

  // m2h turns insert into cons
  testgen::Rng rng(35);
  for (int i = 0; i < 1000; ++i) {
    CnfOrdinal a = testgen::random_cnf(rng, 4);
    CnfOrdinal b = testgen::random_cnf(rng, 4);
    CHECK(m2h(insert(a, b)) == mset_cons(m2h(a), m2h(b)));
  }
}

TEST_CASE("h2m basics") {
  CHECK(h2m({}) == zero());
  testgen::Rng rng(36);
  for (int i = 0; i < 500; ++i) {
    HMultiset x = testgen::random_mset(rng, 5);
    CHECK(audit(h2m(x)));
  }
}
