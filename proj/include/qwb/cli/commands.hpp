#pragma once

#include <iosfwd>

namespace qwb::cli {

/// Full command-line entry point. Exit codes: 0 success, 1 a check failed,
/// 2 usage, parse or configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwb::cli
