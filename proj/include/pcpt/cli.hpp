#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcpt::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kDegenerate = 3,
};

/// Runs one command line (without the program name), e.g.
/// {"test", "--input", "x.csv", "--statistic", "J"}. Output files named by
/// --out are written directly; "-" selects `out`. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcpt::cli
