#pragma once

#include <ostream>

namespace matchinfo {

/// Command-line entry point. Returns the process exit status: 0 when the
/// requested output was fully written, 2 when an input file cannot be
/// opened, 1 for any other failure (CLI11's own codes for usage errors).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace matchinfo
