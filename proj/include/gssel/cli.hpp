#pragma once

namespace gssel {

/// Command-line entry point (kept in the library so tests can drive it).
/// Subcommands: solve, gen, bench, check. Returns the process exit code:
/// 0 success, 1 infeasible, 2 invalid input, 3 internal error.
int cli_main(int argc, const char* const* argv);

}  // namespace gssel
