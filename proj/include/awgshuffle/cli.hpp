#pragma once

#include <ostream>

namespace awgshuffle {

/// Entry point of the `awgshuffle` command. Returns 0 when every requested
/// check passed, 1 when verification failed, 2 on usage, capacity, or
/// validity errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace awgshuffle
