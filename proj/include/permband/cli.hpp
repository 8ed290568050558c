#pragma once

#include <iosfwd>

namespace permband::cli {

// Full command-line surface. Exit codes: 0 success, 1 input error,
// 2 verification failure or internal inconsistency.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace permband::cli
