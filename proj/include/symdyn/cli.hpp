#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symdyn::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;     // the property checked does not hold
inline constexpr int kUsage = 2;     // bad arguments, parse errors, failed invariants
inline constexpr int kResource = 3;  // an enumeration or search cap was hit

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symdyn::cli
