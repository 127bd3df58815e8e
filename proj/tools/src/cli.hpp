#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trd::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kInputError = 3 };

/// Runs one sub-command. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trd::cli
