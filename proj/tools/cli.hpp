#pragma once

#include <iosfwd>

namespace qg::cli {

/// Parse argv and execute one command, writing data to `out` and
/// diagnostics to `err`. Returns the process exit code:
///   0  all requested checks passed (or a pure evaluation succeeded)
///   1  at least one inequality violation was found
///   2  usage error (unknown command/flag, out-of-range q, bad grid, ...)
///   3  numerical non-convergence or overflow
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

} // namespace qg::cli
