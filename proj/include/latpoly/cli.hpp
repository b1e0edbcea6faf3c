#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latpoly {

/// Run one latpoly command line (without the program name). Writes the
/// report to out and diagnostics (including elapsed times) to err.
/// Returns 0 for a true verdict or clean run, 1 for a false verdict,
/// discrepancy, or profile mismatch, and 2 for usage or validation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace latpoly
