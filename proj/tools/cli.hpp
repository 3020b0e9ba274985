#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbtc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

// Runs `sbtc <verb> ...`; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbtc::cli
