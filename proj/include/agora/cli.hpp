#pragma once

#include <iosfwd>

namespace agora {

// Full command-line entry point; returns the process exit code.
// 0 = success / all checks passed, 1 = failure or bad input, 2 = usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace agora
