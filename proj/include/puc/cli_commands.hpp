#pragma once

namespace puc {

/// Parses and executes one command line ("pucop <subcommand> ...").
/// Returns the process exit code: 0 success, 2 configuration error,
/// 3 input parse error, 4 numeric failure.  All output goes to the
/// requested files (or stdout), diagnostics to stderr.
int run_cli(int argc, const char* const* argv);

}  // namespace puc
