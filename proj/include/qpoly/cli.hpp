#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpoly::cli {

/// Exit codes: 0 success, 1 a check failed, 2 usage error, 3 quadrature did
/// not converge.
enum ExitCode : int { ok = 0, check_failed = 1, usage = 2, no_convergence = 3 };

/// Runs one command line (args excludes the program name) writing results to
/// out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpoly::cli
