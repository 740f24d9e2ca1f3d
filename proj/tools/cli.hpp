#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdci::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArguments = 2;
inline constexpr int kExitDataError = 3;

// Runs one `pdci` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdci::cli
