#pragma once

namespace eps0 {

// Three-valued comparison result; exactly one value per comparison.
enum class Ordering3 { Less, Equal, Greater };

inline Ordering3 flip(Ordering3 c) {
  if (c == Ordering3::Less) return Ordering3::Greater;
  if (c == Ordering3::Greater) return Ordering3::Less;
  return Ordering3::Equal;
}

}  // namespace eps0
