#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line surface. run_command takes the arguments after the program
// name, so tests can drive every subcommand in-process.
//
// Exit codes: 0 success; 1 parse/JSON/usage error; 2 invariant violation
// (NotInNormalForm, GuardViolation); 3 descent violation found; 4 resource
// cap hit (DepthExceeded, NumeralTooLarge, CoefficientOverflow).

namespace eps0 {

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

// The built-in example suite behind the `selftest` subcommand; prints one
// line per identity and returns 0 iff everything holds.
int selftest(std::ostream& out);

}  // namespace eps0
