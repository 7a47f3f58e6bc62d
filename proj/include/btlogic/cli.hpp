#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bt {

// Exit codes, one per failure family.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1; // a self-checking comparison failed
inline constexpr int kExitUsage = 2;    // bad invocation / unknown subcommand
inline constexpr int kExitFile = 3;     // unreadable or malformed file
inline constexpr int kExitBuild = 4;    // netlist/table construction or validation
inline constexpr int kExitSolver = 5;   // analog fixed point failed

/// Runs one toolkit command. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bt
