#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diagdensity::cli {

// Parses and executes one command line (without argv[0]).  Data goes to
// `out` (or the --out file), progress and errors to `err`.
// Exit codes: 0 success, 1 verification failure, 2 argument error,
// 3 resource-budget error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace diagdensity::cli
