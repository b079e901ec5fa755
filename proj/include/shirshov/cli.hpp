#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shirshov {

// Full command-line surface; parses args (without the program name),
// writes the report to `out` (or the --out file) and diagnostics to `err`.
// Exit codes: 0 success, 1 usage error, 2 property violation found,
// 3 budget refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shirshov
