#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <variant>

#include "eps0/cnf.hpp"
#include "eps0/errors.hpp"

// Well-founded recursion over CnfOrdinal, and descending-sequence
// analysis. Termination of wf_recurse rests on the well-foundedness of
// the order (every strictly descending chain is finite); the combinator
// additionally enforces at runtime that each recursive call descends, so
// the termination argument is never merely assumed.

namespace eps0 {

// Caller-supplied infinite sequence, evaluated on demand. The caller
// guarantees totality and determinism over the indices actually requested.
using OrdinalSequence = std::function<CnfOrdinal(std::size_t)>;

struct ZeroTailAt {
  std::size_t index;  // least n with f(n) = 0; all later values are 0 too
};

struct Violation {
  std::size_t index;  // first i where the descent condition fails
  CnfOrdinal prev;    // f(i)
  CnfOrdinal next;    // f(i+1)
};

using DescentReport = std::variant<ZeroTailAt, Violation>;

inline constexpr std::size_t kDefaultZeroTailBudget = 1'000'000;

// step is called as step(x, rec); it may call rec only on values strictly
// below x. Every rec call re-checks this and throws PreconditionViolation
// otherwise. Depth shares the global recursion limit (DepthExceeded).
template <class R, class Step>
R wf_recurse(Step&& step, const CnfOrdinal& x) {
  detail::DepthGuard guard;
  auto rec = [&step, &x](const CnfOrdinal& y) -> R {
    if (!lt(y, x))
      throw PreconditionViolation("wf_recurse: recursive call does not strictly descend");
    return wf_recurse<R>(step, y);
  };
  return step(x, rec);
}

// Pseudo-descent over indices [0, n): every step either strictly
// decreases, or both neighbours are zero (a sequence may not "restart"
// after reaching zero). nullopt = ok.
std::optional<Violation> pseudo_prefix_check(const OrdinalSequence& f, std::size_t n);

// Scans f(0), f(1), ... for the least index whose value is zero, checking
// the pseudo-descent condition on every pair it observes. Driven through
// wf_recurse on f(0), whose descent guarantees the scan terminates when
// the input really is pseudo-descending; the step budget is only an
// operational safety net (DepthExceeded when exhausted).
DescentReport zero_tail(const OrdinalSequence& f,
                        std::size_t step_budget = kDefaultZeroTailBudget);

// ok (nullopt) iff trace[i] > trace[i+1] for every consecutive pair;
// empty and singleton traces are trivially ok.
std::optional<Violation> check_strict_trace(std::span<const CnfOrdinal> trace);

}  // namespace eps0
