#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

// Error types and recursion limits shared by every module. All failures are
// exceptions rooted at eps0::Error so callers can catch the whole family.

namespace eps0 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A term failed the Cantor-normal-form check. `path` locates the offending
// subterm as a "/exp" / "/rest" walk from the root (empty = the root).
struct NotInNormalForm : Error {
  explicit NotInNormalForm(std::string offending_path)
      : Error("term is not in Cantor normal form at " +
              (offending_path.empty() ? std::string("<root>") : offending_path)),
        path(std::move(offending_path)) {}
  std::string path;
};

// omega_plus was asked to put an exponent below the first exponent of the
// rest, which would break the descending-exponent invariant.
struct GuardViolation : Error {
  GuardViolation() : Error("exponent is below the first exponent of the rest") {}
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

struct JsonError : Error {
  using Error::Error;
};

struct NumeralTooLarge : Error {
  explicit NumeralTooLarge(std::uint64_t cap)
      : Error("numeral exceeds the cap of " + std::to_string(cap)) {}
};

struct DepthExceeded : Error {
  DepthExceeded() : Error("recursion depth limit exceeded") {}
  explicit DepthExceeded(const char* what) : Error(what) {}
};

struct CoefficientOverflow : Error {
  CoefficientOverflow() : Error("coefficient arithmetic overflowed") {}
};

struct OutOfRange : Error {
  using Error::Error;
};

// wf_recurse's rec callback was invoked on a value not strictly below the
// current argument.
struct PreconditionViolation : Error {
  using Error::Error;
};

inline constexpr std::size_t kDefaultRecursionLimit = 100'000;
inline constexpr std::uint64_t kNumeralCap = 65'536;  // 2^16

namespace detail {
inline std::atomic<std::size_t>& recursion_limit_storage() noexcept {
  static std::atomic<std::size_t> limit{kDefaultRecursionLimit};
  return limit;
}
}  // namespace detail

inline std::size_t recursion_limit() noexcept {
  return detail::recursion_limit_storage().load(std::memory_order_relaxed);
}
inline void set_recursion_limit(std::size_t n) noexcept {
  detail::recursion_limit_storage().store(n, std::memory_order_relaxed);
}

namespace detail {

// RAII depth counter. Structurally recursive routines open one guard per
// level, so adversarially deep inputs fail with DepthExceeded instead of
// exhausting the native stack. The counter is per-thread.
struct DepthGuard {
  DepthGuard() {
    if (++depth() > recursion_limit()) {
      --depth();
      throw DepthExceeded();
    }
  }
  ~DepthGuard() { --depth(); }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;

  static std::size_t& depth() noexcept {
    thread_local std::size_t d = 0;
    return d;
  }
};

}  // namespace detail
}  // namespace eps0
