// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.

#ifndef SPAVING_CLI_HPP
#define SPAVING_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace spaving::cli {

enum ExitCode : int {
  kOk = 0,
  kArgumentError = 1,
  kBudgetError = 2,
  kVerificationFailure = 3,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spaving::cli

#endif  // SPAVING_CLI_HPP
