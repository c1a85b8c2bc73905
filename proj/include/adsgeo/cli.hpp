#pragma once

#include <ostream>

namespace adsgeo {

/// Exit codes of the command-line front end.
enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitBadInput = 2 };

/// Parses arguments and runs one subcommand: roundtrip, causality-class,
/// domain, cosmotime, expansion or certify. Tables and reports go to the
/// --out paths when given, otherwise to `out`; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adsgeo
