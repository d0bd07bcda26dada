#pragma once

#include <iosfwd>

namespace specincl::cli {

// Exit codes: 0 ok, 1 verification found violations, 2 usage or config
// error, 3 numeric failure.
inline constexpr int kOk = 0;
inline constexpr int kViolations = 1;
inline constexpr int kConfigError = 2;
inline constexpr int kNumericError = 3;

// Runs the specincl command line. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace specincl::cli
