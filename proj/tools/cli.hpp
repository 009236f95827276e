#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Entry point for the `isa` command. `args` excludes the program name.
/// Results go to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace isa::cli
