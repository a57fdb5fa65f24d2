#include "eps0/wf.hpp"

namespace eps0 {

std::optional<Violation> pseudo_prefix_check(const OrdinalSequence& f, std::size_t n) {
  if (n == 0) return std::nullopt;
  CnfOrdinal prev = f(0);
  for (std::size_t i = 0; i < n; ++i) {
    CnfOrdinal next = f(i + 1);
    bool ok = gt(prev, next) || (prev.is_zero() && next.is_zero());
    if (!ok) return Violation{i, prev, next};
    prev = next;
  }
  return std::nullopt;
}

DescentReport zero_tail(const OrdinalSequence& f, std::size_t step_budget) {
  std::size_t evals = 0;
  auto at = [&](std::size_t i) {
    if (evals >= step_budget) throw DepthExceeded("zero_tail: step budget exhausted");
    ++evals;
    return f(i);
  };
  std::size_t i = 0;
  CnfOrdinal head = at(0);
  auto step = [&](const CnfOrdinal& x, auto&& rec) -> DescentReport {
    // Invariant: x == f(i). Case split on x as in the scan: a zero head
    // means the tail must stay zero; a nonzero head must strictly drop.
    CnfOrdinal next = at(i + 1);
    if (x.is_zero()) {
      if (!next.is_zero()) return Violation{i, x, next};
      return ZeroTailAt{i};
    }
    if (!gt(x, next)) return Violation{i, x, next};
    ++i;
    return rec(next);  // next < x was just checked, so the guard passes
  };
  return wf_recurse<DescentReport>(step, head);
}

std::optional<Violation> check_strict_trace(std::span<const CnfOrdinal> trace) {
  for (std::size_t i = 0; i + 1 < trace.size(); ++i)
    if (!gt(trace[i], trace[i + 1])) return Violation{i, trace[i], trace[i + 1]};
  return std::nullopt;
}

}  // namespace eps0
