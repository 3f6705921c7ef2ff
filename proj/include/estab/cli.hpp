#pragma once

#include <ostream>
#include <span>
#include <string>

namespace estab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitStrictValidation = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitFile = 66;

// Runs one invocation. `args` excludes the program name. Documents go to
// `out`, diagnostics to `err`; the return value is the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace estab::cli
