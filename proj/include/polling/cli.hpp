#ifndef POLLING_CLI_HPP
#define POLLING_CLI_HPP

#include <iosfwd>

namespace polling {

/// Command-line entry point (subcommands: solve, simulate, sweep, validate,
/// dump-generator). Returns the process exit code: 0 success, 2 config
/// error, 3 solver failure, 4 validation mismatch beyond tolerance under
/// --strict. Honors the POLLING_MAX_STATES environment variable as the
/// state-count cap.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polling

#endif
