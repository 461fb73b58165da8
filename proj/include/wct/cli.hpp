#pragma once

#include <iosfwd>

namespace wct {

/// Runs the command line. Graph6 input is read from `in` when no graph is
/// named on the command line. Exit codes: 0 success, 1 domain error, 2 usage
/// error; failures are written to `err` as one JSON object per line.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wct
