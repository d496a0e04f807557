#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gps {

/// Process exit codes of the command-line front end.
enum ExitCode : int
{
    exit_ok = 0,
    exit_mismatch = 1,
    exit_usage = 2,
    exit_not_converged = 3,
};

/// Run the `gps` command line with `args` (program name excluded).
/// Subcommands: solve, scan, table, critical. CSV goes to `out`, diagnostics to `err`.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace gps
