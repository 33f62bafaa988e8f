#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invcensus::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one command. args excludes the program name. Results go to out,
/// diagnostics to err; the return value is the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invcensus::cli
