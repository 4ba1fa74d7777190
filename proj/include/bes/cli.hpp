#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bes::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;  // counterexample found / configuration not found

// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace bes::cli
