#pragma once

#include "montyhall/verify.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace montyhall {

/// Stable exit codes of the `montyhall` tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

struct CliEnvironment {
    /// Value of MONTY_SEED, if set.
    std::optional<std::string> default_seed;
    AnalyticModel model = AnalyticModel::closed_form();
};

/// Runs the tool on `args` (args[0] is the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliEnvironment& env = {});

}  // namespace montyhall
