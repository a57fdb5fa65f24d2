#include "eps0/io.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "eps0/arith.hpp"
#include "eps0/convert.hpp"
#include "json.hpp"

namespace eps0 {

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok { Number, W, WPow, Plus, Star, OPlus, OTimes, LParen, RParen, End };

struct Token {
  Tok kind;
  std::uint64_t value = 0;  // for Number
  std::size_t pos = 0;
};

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;

  Token next() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    std::size_t start = pos;
    if (pos == src.size()) return {Tok::End, 0, start};
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t value = 0;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(src[pos] - '0');
        if (value > kNumeralCap) throw NumeralTooLarge(kNumeralCap);
        ++pos;
      }
      return {Tok::Number, value, start};
    }
    if (c == 'w') {
      ++pos;
      if (pos < src.size() && src[pos] == '^') {
        ++pos;
        return {Tok::WPow, 0, start};
      }
      return {Tok::W, 0, start};
    }
    if (c == '+') {
      ++pos;
      return {Tok::Plus, 0, start};
    }
    if (c == '*') {
      ++pos;
      return {Tok::Star, 0, start};
    }
    if (c == '(') {
      if (pos + 2 < src.size() && src[pos + 2] == ')') {
        if (src[pos + 1] == '+') {
          pos += 3;
          return {Tok::OPlus, 0, start};
        }
        if (src[pos + 1] == '*') {
          pos += 3;
          return {Tok::OTimes, 0, start};
        }
      }
      ++pos;
      return {Tok::LParen, 0, start};
    }
    if (c == ')') {
      ++pos;
      return {Tok::RParen, 0, start};
    }
    throw ParseError("unexpected character", start);
  }
};

// --------------------------------------------------------------- parsing

struct Parser {
  Lexer lex;
  Token cur;

  explicit Parser(std::string_view src) : lex{src}, cur(lex.next()) {}

  void advance() { cur = lex.next(); }

  ExprPtr mk(Expr::Node n) { return std::make_shared<Expr>(Expr{std::move(n)}); }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_prod();
    for (;;) {
      if (cur.kind == Tok::Plus) {
        advance();
        lhs = mk(Expr::Add{lhs, parse_prod()});
      } else if (cur.kind == Tok::OPlus) {
        advance();
        lhs = mk(Expr::HSum{lhs, parse_prod()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_prod() {
    ExprPtr lhs = parse_atom();
    for (;;) {
      if (cur.kind == Tok::Star) {
        advance();
        lhs = mk(Expr::Mul{lhs, parse_atom()});
      } else if (cur.kind == Tok::OTimes) {
        advance();
        lhs = mk(Expr::HMul{lhs, parse_atom()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_atom() {
    detail::DepthGuard guard;
    switch (cur.kind) {
      case Tok::Number: {
        std::uint64_t v = cur.value;
        advance();
        if (v == 0) return mk(Expr::Zero{});
        return mk(Expr::Nat{v});
      }
      case Tok::W:
        advance();
        return mk(Expr::Omega{});
      case Tok::WPow: {
        advance();
        return mk(Expr::OmegaPow{parse_atom()});
      }
      case Tok::LParen: {
        advance();
        ExprPtr e = parse_sum();
        if (cur.kind != Tok::RParen) throw ParseError("expected ')'", cur.pos);
        advance();
        return e;
      }
      default:
        throw ParseError("expected an expression atom", cur.pos);
    }
  }
};

// -------------------------------------------------------------- printing

std::string render_summand(const CnfOrdinal& e) {
  detail::DepthGuard guard;
  if (e.is_zero()) return "1";                    // w^0
  if (e == one()) return "w";                     // w^1
  std::string inner = print_canonical(e);
  // Already-atomic renderings need no parentheses; only "w" can occur
  // here ("0" and "1" were handled above).
  if (inner == "w") return "w^w";
  return "w^(" + inner + ")";
}

nlohmann::json encode_json(const CnfOrdinal& a) {
  detail::DepthGuard guard;
  nlohmann::json arr = nlohmann::json::array();
  for (const CnfOrdinal* cur = &a; !cur->is_zero(); cur = &cur->rest())
    arr.push_back(encode_json(cur->exp()));
  return arr;
}

CnfOrdinal decode_json(const nlohmann::json& j, const std::string& path) {
  detail::DepthGuard guard;
  if (!j.is_array()) throw JsonError("ordinal encoding must be a JSON array at " +
                                     (path.empty() ? std::string("<root>") : path));
  std::vector<CnfOrdinal> exps;
  exps.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    exps.push_back(decode_json(j[i], path + "/" + std::to_string(i)));
  CnfOrdinal acc;
  for (std::size_t i = exps.size(); i-- > 0;) {
    try {
      acc = omega_plus(exps[i], acc);
    } catch (const GuardViolation&) {
      throw NotInNormalForm(path + "/" + std::to_string(i));
    }
  }
  return acc;
}

}  // namespace

ExprPtr parse_expr(std::string_view input) {
  Parser p(input);
  ExprPtr e = p.parse_sum();
  if (p.cur.kind != Tok::End) throw ParseError("unexpected trailing input", p.cur.pos);
  return e;
}

CnfOrdinal eval_expr(const Expr& e) {
  detail::DepthGuard guard;
  return std::visit(
      [](const auto& n) -> CnfOrdinal {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Zero>)
          return {};
        else if constexpr (std::is_same_v<T, Expr::Nat>)
          return from_nat(n.value);
        else if constexpr (std::is_same_v<T, Expr::Omega>)
          return omega();
        else if constexpr (std::is_same_v<T, Expr::OmegaPow>)
          return omega_pow(eval_expr(*n.arg));
        else if constexpr (std::is_same_v<T, Expr::Add>)
          return add(eval_expr(*n.lhs), eval_expr(*n.rhs));
        else if constexpr (std::is_same_v<T, Expr::Mul>)
          return mul(eval_expr(*n.lhs), eval_expr(*n.rhs));
        else if constexpr (std::is_same_v<T, Expr::HSum>)
          return hsum_cnf(eval_expr(*n.lhs), eval_expr(*n.rhs));
        else
          return hmul_cnf(eval_expr(*n.lhs), eval_expr(*n.rhs));
      },
      e.node);
}

std::string print_canonical(const CnfOrdinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const CnfOrdinal* cur = &a; !cur->is_zero(); cur = &cur->rest()) {
    if (!out.empty()) out += " + ";
    out += render_summand(cur->exp());
  }
  return out;
}

std::string to_json(const CnfOrdinal& a) { return encode_json(a).dump(); }

CnfOrdinal from_json(std::string_view text) {
  // Cheap nesting pre-scan so adversarially deep input fails cleanly
  // before any recursive work.
  std::size_t depth = 0, max_depth = 0;
  for (char c : text) {
    if (c == '[') max_depth = std::max(max_depth, ++depth);
    else if (c == ']' && depth > 0) --depth;
  }
  if (max_depth > recursion_limit()) throw DepthExceeded("JSON nesting exceeds the depth limit");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw JsonError(std::string("invalid JSON: ") + e.what());
  }
  return decode_json(j, "");
}

std::string render_tree(const Tree& t) {
  detail::DepthGuard guard;
  if (t.is_zero()) return "0";
  return "(w^ " + render_tree(t.exp()) + " + " + render_tree(t.rest()) + ")";
}

std::string render_mset(const HMultiset& x) {
  detail::DepthGuard guard;
  std::string out = "{";
  bool first = true;
  for (const HMultiset& child : x.children()) {
    if (!first) out += ", ";
    first = false;
    out += render_mset(child);
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const CnfOrdinal& a) {
  return os << print_canonical(a);
}

std::ostream& operator<<(std::ostream& os, const HMultiset& x) { return os << render_mset(x); }

std::ostream& operator<<(std::ostream& os, const Tree& t) { return os << render_tree(t); }

std::ostream& operator<<(std::ostream& os, Ordering3 c) {
  switch (c) {
    case Ordering3::Less: return os << "Less";
    case Ordering3::Equal: return os << "Equal";
    case Ordering3::Greater: return os << "Greater";
  }
  return os;
}

}  // namespace eps0
