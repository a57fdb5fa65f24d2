#include "eps0/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "eps0/arith.hpp"
#include "eps0/convert.hpp"
#include "eps0/io.hpp"
#include "eps0/wf.hpp"

namespace eps0 {

namespace {

int exit_code_for(const Error& e) {
  if (dynamic_cast<const NotInNormalForm*>(&e) || dynamic_cast<const GuardViolation*>(&e))
    return 2;
  if (dynamic_cast<const DepthExceeded*>(&e) || dynamic_cast<const NumeralTooLarge*>(&e) ||
      dynamic_cast<const CoefficientOverflow*>(&e))
    return 4;
  return 1;  // parse/JSON and everything else
}

// One expression per line; blank lines and '#' comments are ignored.
std::vector<CnfOrdinal> read_trace(std::istream& is) {
  std::vector<CnfOrdinal> out;
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    out.push_back(eval_expr(*parse_expr(line)));
  }
  return out;
}

std::string read_all(std::istream& is) {
  return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

std::string violation_line(const Violation& v) {
  std::ostringstream os;
  os << "violation at index " << v.index << ": " << print_canonical(v.prev) << " -> "
     << print_canonical(v.next);
  return os.str();
}

}  // namespace

int selftest(std::ostream& out) {
  struct Check {
    const char* name;
    bool ok;
  };

  const CnfOrdinal two = from_nat(2);
  const HMultiset h_one = m2h(one());
  const HMultiset h_omega = m2h(omega());

  // The swap example: insertion order into a multiset never matters.
  const HMultiset sa = h_one, sb = h_omega, sc = m2h(zero());
  HMultiset fwd = mset_cons(sa, mset_cons(sb, mset_cons(sc, {})));
  HMultiset rev = mset_cons(sc, mset_cons(sb, mset_cons(sa, {})));

  const std::vector<Check> checks = {
      {"1 + w == w", add(one(), omega()) == omega()},
      {"w + 1 > w", lt(omega(), add(omega(), one()))},
      {"(1 + 1) * w == w", mul(two, omega()) == omega()},
      {"w * (1 + 1) == w + w", mul(omega(), two) == add(omega(), omega())},
      {"w < w + w", lt(omega(), add(omega(), omega()))},
      {"1 (+) w == w + 1", hsum_cnf(one(), omega()) == add(omega(), one())},
      {"(1 + 1) (*) w == w + w", hmul_cnf(two, omega()) == add(omega(), omega())},
      {"multisets: 1 + w == w", add_mset(h_one, h_omega) == h_omega},
      {"multisets: w * (1 + 1) == {1, 1}",
       mul_mset(h_omega, m2h(two)) == m2h(add(omega(), omega()))},
      {"1 (+) w^w (+) w == w^w + w + 1",
       hsum(hsum(h_one, m2h(omega_pow(omega()))), h_omega) ==
           m2h(add(add(omega_pow(omega()), omega()), one()))},
      {"0 < 0 is false", !lt(zero(), zero())},
      {"w < (1 + 1) (*) w", lt(omega(), hmul_cnf(two, omega()))},
      {"w^w < w^(1 + w) is false", !lt(omega_pow(omega()), omega_pow(add(one(), omega())))},
      {"w^w < w^(1 (+) w)", lt(omega_pow(omega()), omega_pow(hsum_cnf(one(), omega())))},
      {"multiset insertion order is irrelevant", fwd == rev},
  };

  std::size_t passed = 0;
  for (const Check& c : checks) {
    out << (c.ok ? "pass  " : "FAIL  ") << c.name << "\n";
    if (c.ok) ++passed;
  }
  out << "selftest: " << passed << "/" << checks.size() << " identities hold\n";
  return passed == checks.size() ? 0 : 1;
}

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"ordinal calculator: Cantor normal form arithmetic below epsilon_0", "ordcalc"};
  app.require_subcommand(1);

  std::string eval_text;
  bool eval_json = false;
  auto* cmd_eval =
      app.add_subcommand("eval", "evaluate an expression and print its canonical form");
  cmd_eval->add_option("EXPR", eval_text, "expression in the ordinal grammar")->required();
  cmd_eval->add_flag("--json", eval_json, "print the JSON wire form instead of text");

  std::string cmp_lhs, cmp_rhs;
  auto* cmd_cmp = app.add_subcommand("cmp", "compare two expressions; prints LT, EQ or GT");
  cmd_cmp->add_option("LHS", cmp_lhs)->required();
  cmd_cmp->add_option("RHS", cmp_rhs)->required();

  std::string conv_from = "text", conv_to = "text", conv_input;
  auto* cmd_convert = app.add_subcommand("convert", "convert between representations");
  cmd_convert->add_option("--from", conv_from, "input form (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_convert->add_option("--to", conv_to, "output form (default text)")
      ->check(CLI::IsMember({"text", "json", "tree", "mset-debug"}));
  cmd_convert->add_option("INPUT", conv_input, "expression or JSON; - reads stdin")->required();

  std::string desc_file;
  auto* cmd_desc =
      app.add_subcommand("check-desc", "check that a trace file is strictly descending");
  cmd_desc->add_option("FILE", desc_file, "one expression per line; - reads stdin")->required();

  std::string tail_file;
  auto* cmd_tail = app.add_subcommand(
      "zero-tail", "find the first index from which a pseudo-descending sequence stays zero");
  cmd_tail->add_option("FILE", tail_file,
                       "one expression per line, final value repeats forever; - reads stdin")
      ->required();

  auto* cmd_selftest = app.add_subcommand("selftest", "run the built-in identity suite");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ordcalc");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  // Opens FILE, or falls back to the command's stdin for "-".
  std::ifstream file;
  auto open_source = [&](const std::string& name) -> std::istream* {
    if (name == "-") return &in;
    file.open(name);
    if (!file) {
      err << "error: cannot open " << name << "\n";
      return nullptr;
    }
    return &file;
  };

  try {
    if (*cmd_eval) {
      CnfOrdinal v = eval_expr(*parse_expr(eval_text));
      out << (eval_json ? to_json(v) : print_canonical(v)) << "\n";
      return 0;
    }

    if (*cmd_cmp) {
      CnfOrdinal a = eval_expr(*parse_expr(cmp_lhs));
      CnfOrdinal b = eval_expr(*parse_expr(cmp_rhs));
      switch (compare3(a, b)) {
        case Ordering3::Less: out << "LT\n"; break;
        case Ordering3::Equal: out << "EQ\n"; break;
        case Ordering3::Greater: out << "GT\n"; break;
      }
      return 0;
    }

    if (*cmd_convert) {
      std::string text = conv_input == "-" ? read_all(in) : conv_input;
      CnfOrdinal v =
          conv_from == "json" ? from_json(text) : eval_expr(*parse_expr(text));
      if (conv_to == "text") {
        out << print_canonical(v) << "\n";
      } else if (conv_to == "json") {
        out << to_json(v) << "\n";
      } else if (conv_to == "tree") {
        out << render_tree(m2t(v).term()) << "\n";
      } else {
        out << render_mset(m2h(v)) << "\n";
      }
      return 0;
    }

    if (*cmd_desc) {
      std::istream* src = open_source(desc_file);
      if (!src) return 1;
      auto trace = read_trace(*src);
      if (auto v = check_strict_trace(trace)) {
        out << violation_line(*v) << "\n";
        return 3;
      }
      out << "ok\n";
      return 0;
    }

    if (*cmd_tail) {
      std::istream* src = open_source(tail_file);
      if (!src) return 1;
      auto values = read_trace(*src);
      if (values.empty()) {
        err << "error: zero-tail needs at least one value\n";
        return 1;
      }
      OrdinalSequence f = [&values](std::size_t i) {
        return values[std::min(i, values.size() - 1)];
      };
      DescentReport report = zero_tail(f);
      if (const auto* z = std::get_if<ZeroTailAt>(&report)) {
        out << z->index << "\n";
        return 0;
      }
      out << violation_line(std::get<Violation>(report)) << "\n";
      return 3;
    }

    if (*cmd_selftest) return selftest(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }

  return 0;
}

}  // namespace eps0
