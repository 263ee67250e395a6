#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lass::cli {

enum Status : int { kOk = 0, kFailure = 1, kInputError = 2 };

/// Runs one command line (without the program name). Exit status as returned
/// by the `lass` executable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lass::cli
