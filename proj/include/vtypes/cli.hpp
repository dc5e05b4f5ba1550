#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vtypes {

inline constexpr const char* kVersion = "0.1.0";

/// Exit statuses of the command-line front end.
enum ExitStatus { kExitOk = 0, kExitInputError = 2, kExitSearchExhausted = 3 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vtypes
