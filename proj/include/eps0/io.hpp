#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "eps0/cnf.hpp"
#include "eps0/mset.hpp"
#include "eps0/tree.hpp"

// Textual surface: the expression grammar, the canonical printer and the
// JSON wire form.
//
//   expr := sum
//   sum  := prod (("+" | "(+)") prod)*        left-associative
//   prod := atom (("*" | "(*)") atom)*        left-associative
//   atom := "0" | numeral | "w" | "w^" atom | "(" expr ")"
//
// "+" and "*" are ordinary ordinal addition and multiplication; "(+)" and
// "(*)" are the Hessenberg (natural) sum and product. "w^" binds tightest.
// Whitespace between tokens is insignificant; "w^", "(+)" and "(*)" are
// single tokens and admit no interior whitespace.

namespace eps0 {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  struct Zero {};
  struct Nat {
    std::uint64_t value;
  };
  struct Omega {};
  struct OmegaPow {
    ExprPtr arg;
  };
  struct Add {
    ExprPtr lhs, rhs;
  };
  struct Mul {
    ExprPtr lhs, rhs;
  };
  struct HSum {
    ExprPtr lhs, rhs;
  };
  struct HMul {
    ExprPtr lhs, rhs;
  };

  using Node = std::variant<Zero, Nat, Omega, OmegaPow, Add, Mul, HSum, HMul>;
  Node node;
};

// Throws ParseError with a byte position; NumeralTooLarge above the cap.
ExprPtr parse_expr(std::string_view input);

CnfOrdinal eval_expr(const Expr& e);

// Coefficient-free canonical rendering: summands in stored non-increasing
// order joined by " + "; an exponent renders as "1" when 0, "w" when 1,
// and otherwise "w^A" with A parenthesized unless it is a single token.
// parse_expr(print_canonical(a)) always evaluates back to a.
std::string print_canonical(const CnfOrdinal& a);

// Wire form: an ordinal is the JSON array of its exponents' encodings in
// non-increasing order; 0 = [], 1 = [[]], w = [[[]]], w+1 = [[[]],[]].
std::string to_json(const CnfOrdinal& a);

// Throws JsonError on malformed input or non-array structure, and
// NotInNormalForm when the exponent order violates normal form.
CnfOrdinal from_json(std::string_view text);

// Debug renderings used by the CLI.
std::string render_tree(const Tree& t);    // 0 or (w^ E + R)
std::string render_mset(const HMultiset& x);  // nested braces, 1 = {{}}

std::ostream& operator<<(std::ostream& os, const CnfOrdinal& a);
std::ostream& operator<<(std::ostream& os, const HMultiset& x);
std::ostream& operator<<(std::ostream& os, const Tree& t);
std::ostream& operator<<(std::ostream& os, Ordering3 c);

}  // namespace eps0
