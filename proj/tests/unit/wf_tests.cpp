#include "doctest.h"

#include <variant>

#include "eps0/arith.hpp"
#include "eps0/io.hpp"
#include "eps0/wf.hpp"
#include "support/generators.hpp"

using namespace eps0;

namespace {

// Plain-loop twin of zero_tail, used as a differential oracle.
DescentReport zero_tail_loop(const OrdinalSequence& f) {
  CnfOrdinal prev = f(0);
  for (std::size_t i = 0;; ++i) {
    CnfOrdinal next = f(i + 1);
    if (prev.is_zero()) {
      if (!next.is_zero()) return Violation{i, prev, next};
      return ZeroTailAt{i};
    }
    if (!gt(prev, next)) return Violation{i, prev, next};
    prev = next;
  }
}

OrdinalSequence from_values(std::vector<CnfOrdinal> values) {
  return [values = std::move(values)](std::size_t i) {
    return i < values.size() ? values[i] : CnfOrdinal{};
  };
}

}  // namespace

TEST_CASE("wf_recurse base case") {
  auto step = [](const CnfOrdinal& x, auto&&) { return x.is_zero() ? 41 : -1; };
  CHECK(wf_recurse<int>(step, zero()) == 41);
}

TEST_CASE("wf_recurse matches an iterative count along the exponent chain") {
  auto step = [](const CnfOrdinal& x, auto&& rec) -> std::size_t {
    if (x.is_zero()) return 0;
    return 1 + rec(x.exp());  // exp(x) < x below epsilon_0
  };
  testgen::Rng rng(61);
  for (int i = 0; i < 500; ++i) {
    CnfOrdinal x = testgen::random_cnf(rng, 5);
    std::size_t expected = 0;
    for (const CnfOrdinal* cur = &x; !cur->is_zero(); cur = &cur->exp()) ++expected;
    CHECK(wf_recurse<std::size_t>(step, x) == expected);
  }
}

TEST_CASE("wf_recurse rejects non-descending recursive calls") {
  auto bad = [](const CnfOrdinal& x, auto&& rec) -> int {
    if (x.is_zero()) return 0;
    return rec(x);  // not strictly below itself
  };
  CHECK_THROWS_AS(wf_recurse<int>(bad, omega()), PreconditionViolation);
}

TEST_CASE("wf_recurse completes on random structurally descending computations") {
  testgen::Rng rng(62);
  auto step = [&rng](const CnfOrdinal& x, auto&& rec) -> std::size_t {
    if (x.is_zero()) return 0;
    return 1 + rec(testgen::random_below(rng, x));
  };
  for (int i = 0; i < 300; ++i) {
    CnfOrdinal x = testgen::random_cnf(rng, 5);
    CHECK_NOTHROW((void)wf_recurse<std::size_t>(step, x));
  }
}

TEST_CASE("pseudo_prefix_check") {
  OrdinalSequence zeros = [](std::size_t) { return zero(); };
  CHECK(!pseudo_prefix_check(zeros, 10).has_value());

  OrdinalSequence good = from_values({omega(), one(), zero()});
  CHECK(!pseudo_prefix_check(good, 3).has_value());

  OrdinalSequence restart = from_values({omega(), zero(), from_nat(5), zero()});
  auto v = pseudo_prefix_check(restart, 3);
  REQUIRE(v.has_value());
  CHECK(v->index == 1);
  CHECK(v->prev == zero());
  CHECK(v->next == from_nat(5));
}

TEST_CASE("zero_tail on the named sequences") {
  OrdinalSequence zeros = [](std::size_t) { return zero(); };
  CHECK(std::get<ZeroTailAt>(zero_tail(zeros)).index == 0);

  OrdinalSequence s2 = from_values({omega(), one(), zero()});
  CHECK(std::get<ZeroTailAt>(zero_tail(s2)).index == 2);

  OrdinalSequence s3 = [](std::size_t i) { return from_nat(i < 3 ? 3 - i : 0); };
  CHECK(std::get<ZeroTailAt>(zero_tail(s3)).index == 3);

  OrdinalSequence restart = from_values({omega(), zero(), from_nat(5), zero()});
  auto v = std::get<Violation>(zero_tail(restart));
  CHECK(v.index == 1);

  // constant nonzero never descends
  OrdinalSequence stuck = [](std::size_t) { return omega(); };
  CHECK(std::get<Violation>(zero_tail(stuck)).index == 0);
}

TEST_CASE("zero_tail minimality and incremental checking on generated sequences") {
  testgen::Rng rng(63);
  for (int i = 0; i < 500; ++i) {
    auto seq = testgen::random_pseudo_descending(rng, 4);
    OrdinalSequence f = [&seq](std::size_t k) { return seq.at(k); };

    DescentReport r = zero_tail(f);
    auto z = std::get<ZeroTailAt>(r);
    CHECK(z.index == seq.first_zero);
    CHECK(f(z.index) == zero());
    if (z.index > 0) CHECK(f(z.index - 1) != zero());
    CHECK(!pseudo_prefix_check(f, z.index).has_value());

    // the wf-driven scan and the plain loop agree
    auto loop = std::get<ZeroTailAt>(zero_tail_loop(f));
    CHECK(loop.index == z.index);

    // dropping the first element shifts the zero point down by one
    if (seq.first_zero > 0) {
      OrdinalSequence shifted = [&seq](std::size_t k) { return seq.at(k + 1); };
      auto zs = std::get<ZeroTailAt>(zero_tail(shifted));
      CHECK(z.index == zs.index + 1);
    }
  }
}

TEST_CASE("zero_tail step budget") {
  OrdinalSequence slow = [](std::size_t i) { return from_nat(i < 100 ? 100 - i : 0); };
  CHECK_THROWS_AS(zero_tail(slow, 10), DepthExceeded);
  CHECK(std::get<ZeroTailAt>(zero_tail(slow, 200)).index == 100);
}

TEST_CASE("check_strict_trace") {
  std::vector<CnfOrdinal> good = {add(omega(), one()), omega(), one(), zero()};
  CHECK(!check_strict_trace(good).has_value());

  std::vector<CnfOrdinal> repeat = {one(), one()};
  auto v = check_strict_trace(repeat);
  REQUIRE(v.has_value());
  CHECK(v->index == 0);

  CHECK(!check_strict_trace(std::vector<CnfOrdinal>{}).has_value());
  CHECK(!check_strict_trace(std::vector<CnfOrdinal>{omega()}).has_value());
}
