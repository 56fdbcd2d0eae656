#pragma once

#include <ostream>

namespace otlab::cli {

// Exit codes: 0 success, 1 failed verification, 2 usage or parse error, 3 degenerate input.
enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsage = 2, kDegenerate = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace otlab::cli
