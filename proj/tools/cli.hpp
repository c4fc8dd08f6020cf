#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icurve::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // failed verification, genericity or bad file
inline constexpr int kUsage = 2;

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icurve::cli
