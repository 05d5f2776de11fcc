#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bwkit::cli {

/// Exit codes of every subcommand.
enum Exit : int {
    exit_pass = 0,
    exit_verify_fail = 1,
    exit_budget = 2,
    exit_malformed = 3,
    exit_unsupported = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bwkit::cli
