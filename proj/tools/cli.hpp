#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationFailure = 2;
inline constexpr int kParseFailure = 3;
inline constexpr int kInternalFailure = 4;

// Runs the `toric` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
