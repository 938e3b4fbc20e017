#pragma once

// The toric-kit command-line front end. run() is the whole program minus
// process plumbing so that tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitDegenerate = 4;

/// `args` excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
