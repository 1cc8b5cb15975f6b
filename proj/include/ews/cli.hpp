#pragma once

namespace ews::cli {

/// Full command-line entry point. Returns the process exit status:
///   0 success, 1 domain/precondition error, 2 I/O or config error,
///   64 usage error.
int run(int argc, const char* const* argv);

}  // namespace ews::cli
