#ifndef GCG_CLI_HPP
#define GCG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gcg::cli {

// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadArguments = 2,
  kIoError = 3,
  kResourceCeiling = 4,
  kDomainError = 5,
};

// Default directory for CSV outputs when --out is omitted.
inline constexpr const char* kOutputDirEnv = "GCG_OUTPUT_DIR";

// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcg::cli

#endif  // GCG_CLI_HPP
