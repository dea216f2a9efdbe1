// Command-line front end: capacity / schedule / paths / check subcommands
// over JSON network documents. Kept as a library function so the whole
// surface is testable without spawning processes.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace one21 {

// Exit codes: 0 success, 1 cross-check failure, 2 parse error,
// 3 unsupported mode, 4 size limit exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace one21
