#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sts::cli {

enum ExitCode : int {
    kOk = 0,
    kTestFailure = 1,
    kUsage = 2,
    kIo = 3,
};

/// Entry point for the rand-sts tool. `args` excludes the program name.
/// Everything the tool prints goes to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sts::cli
