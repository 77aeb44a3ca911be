#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace citegen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad invocation detected after flag parsing (inconsistent flags, missing
/// inputs). Reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs the tool on `args` (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace citegen::cli
