#ifndef NORMEQ_CLI_HPP
#define NORMEQ_CLI_HPP

#include <ostream>

namespace normeq {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_invalid = 1,
    exit_not_exact = 2,
    exit_no = 3,
    exit_undetermined = 4,
    exit_verify_failed = 5,
};

/// Subcommands: norm, check, sweep, generate, verify.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace normeq

#endif // NORMEQ_CLI_HPP
