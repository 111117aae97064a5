#pragma once

#include <iosfwd>

namespace dowlab {

// Exit codes: 0 success, 1 identity or tolerance failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dowlab
