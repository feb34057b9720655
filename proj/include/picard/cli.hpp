#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace picard::cli {

enum ExitCode : int {
  kOk = 0,
  kRejected = 1,  // non-member or failed verification
  kBadInput = 2,  // I/O, parse or flag errors
};

/// Runs the command line `args` (args[0] is the program name). Standard
/// input "-" is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace picard::cli
