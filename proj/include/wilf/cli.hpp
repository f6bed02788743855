#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wilf::cli {

enum ExitCode : int {
  kOk = 0,
  kInvariantViolation = 1,
  kUsage = 2,
  kCapExceeded = 3,
  kIoError = 4,
  kInconclusive = 5,
};

/// Environment variable naming the default checkpoint directory.
inline constexpr const char* kCheckpointDirEnv = "WILF_CHECKPOINT_DIR";

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wilf::cli
