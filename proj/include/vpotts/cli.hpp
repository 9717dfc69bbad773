#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vpotts {

enum ExitCode : int { kExitOk = 0, kExitDisagreement = 1, kExitUsage = 2, kExitCapacity = 3 };

/// Runs one command line (without the program name). A missing input path or
/// "-" reads the graph document from `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace vpotts
