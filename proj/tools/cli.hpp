#pragma once

#include <ostream>

namespace nctrace {

/// Full command-line entry point, separated from main() so tests can drive
/// it in-process. Returns the process exit code: 0 on success, 1 on a
/// verification finding or an exceeded budget, 2 on usage or parse errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nctrace
