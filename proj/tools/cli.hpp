#pragma once

#include <iosfwd>

namespace pirank {

// Exit codes: 0 ok, 2 bad input, 3 budget exhausted, 4 hypothesis failure,
// 5 a proven inequality or invariant failed.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pirank
