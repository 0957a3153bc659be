#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hadalab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;  // also: audit deviates from its golden file
inline constexpr int kUsageError = 2;

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hadalab::cli
