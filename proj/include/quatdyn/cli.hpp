#pragma once

#include <ostream>

namespace quatdyn {

/// Command-line entry point, separated from main() so tests can run it
/// in-process.  Exit codes: 0 success, 1 unexpected failure, 2 bad usage or
/// unreadable input, 3 singular input, 4 ill-conditioned analysis, 5 failed
/// verification check, 6 unstable numerical estimate.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quatdyn
