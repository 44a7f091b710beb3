#pragma once

#include <iosfwd>

namespace s2g::cli {

/// Parses argv and runs one subcommand. Returns 0 on success, 1 on a
/// computational failure (solver, residual refusal, failed suite) and 2 on a
/// usage error. Tables go to `out` unless --output is given; "error: ..."
/// lines go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace s2g::cli
