#pragma once

#include <iosfwd>

namespace lienil::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, bad_arguments = 2, cap_exceeded = 3 };

// Entry point of the `lienil` tool; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lienil::cli
