#pragma once

#include <iosfwd>

namespace rightsize {

/// Entry point of the `rightsize` tool. Returns 0 on success, 1 when a solver
/// or input error occurred (or verify/audit found a problem) and 2 on bad usage.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rightsize
