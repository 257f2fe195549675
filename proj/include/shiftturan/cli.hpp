#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftturan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Output goes to `out`,
/// one-line diagnostics to `err`. Returns 0 on success, 1 when a `verify`
/// check fails, 2 on usage, parse or I/O errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftturan
