#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotgraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, single-line diagnostics to `err`; input path `-` reads `in`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace knotgraph
