#include "eps0/tree.hpp"

#include <optional>
#include <string>

namespace eps0 {

Tree::Node::~Node() {
  // Release the summand chain iteratively; destruction of long chains (for
  // instance numerals, which are unary-sized) must not recurse per summand.
  auto tail = std::move(rest.node_);
  while (tail && tail.use_count() == 1) {
    std::shared_ptr<const Node> next = std::move(const_cast<Node&>(*tail).rest.node_);
    tail = std::move(next);
  }
}

namespace {

enum class Cmp { Lt, Eq, Gt };

// Lexicographic three-way comparison; Eq coincides with structural
// equality. Recurses on exponents, iterates along rests.
Cmp cmp_tree(const Tree& a, const Tree& b) {
  detail::DepthGuard guard;
  const Tree* x = &a;
  const Tree* y = &b;
  for (;;) {
    if (x->identical_to(*y)) return Cmp::Eq;
    if (x->is_zero()) return Cmp::Lt;
    if (y->is_zero()) return Cmp::Gt;
    Cmp c = cmp_tree(x->exp(), y->exp());
    if (c != Cmp::Eq) return c;
    x = &x->rest();
    y = &y->rest();
  }
}

// Path of the first subterm breaking normal form, or nullopt. The path is
// only materialized on failure so that validating big terms stays linear.
std::optional<std::string> cnf_offender(const Tree& a) {
  detail::DepthGuard guard;
  std::size_t index = 0;
  for (const Tree* cur = &a; !cur->is_zero(); cur = &cur->rest(), ++index) {
    auto prefix = [&] {
      std::string p;
      for (std::size_t i = 0; i < index; ++i) p += "/rest";
      return p;
    };
    if (auto bad = cnf_offender(cur->exp())) return prefix() + "/exp" + *bad;
    const Tree& f = tree_fst(cur->rest());
    if (!(tree_lt(f, cur->exp()) || cur->exp() == f)) return prefix();
  }
  return std::nullopt;
}

}  // namespace

bool operator==(const Tree& a, const Tree& b) { return cmp_tree(a, b) == Cmp::Eq; }

const Tree& tree_fst(const Tree& a) {
  static const Tree zero;
  return a.is_zero() ? zero : a.exp();
}

bool tree_lt(const Tree& a, const Tree& b) { return cmp_tree(a, b) == Cmp::Lt; }

bool is_cnf(const Tree& a) {
  detail::DepthGuard guard;
  for (const Tree* cur = &a; !cur->is_zero(); cur = &cur->rest()) {
    if (!is_cnf(cur->exp())) return false;
    const Tree& f = tree_fst(cur->rest());
    // On raw trees the non-strict order is literally "greater or equal".
    if (!(tree_lt(f, cur->exp()) || cur->exp() == f)) return false;
  }
  return true;
}

CnfTree validate(const Tree& a) {
  if (auto bad = cnf_offender(a)) throw NotInNormalForm(*bad);
  return CnfTree(a);
}

}  // namespace eps0
