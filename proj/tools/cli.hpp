#pragma once

#include <iosfwd>

namespace msulab::cli {

/// Entry point of the `msulab` tool. Data goes to `out`, diagnostics to
/// `err`. Returns the process exit code: 0 on success, 1 on a runtime
/// error, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace msulab::cli
