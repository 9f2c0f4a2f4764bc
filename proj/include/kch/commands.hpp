#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kch {

/// Dispatches one CLI invocation (without the program name). Emits one
/// JSON result record per line on `out` (or raw CSV for `trace --csv -`).
/// Exit code: 0 success, 1 verification failure, 2 input error.
int run_command(const std::vector<std::string>& args, std::ostream& out);

}  // namespace kch
