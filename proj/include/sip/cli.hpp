#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sip {

// Runs one CLI invocation. args excludes the program name. Payloads go to
// out, diagnostics to err. Exit codes: 0 success/accept/yes, 1 clean
// negative, 2 input or format error, 3 internal invariant violation,
// 4 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace sip
