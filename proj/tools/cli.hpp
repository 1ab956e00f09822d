#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace krasno::cli {

// Exit statuses.
inline constexpr int kOk = 0, kInternal = 1, kInvalidInput = 2, kViolation = 3;

/// Runs the command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace krasno::cli
