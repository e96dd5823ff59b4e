#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "nestroot/error.hpp"

namespace nestroot::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCannotCertify = 2;
inline constexpr int kExitInternal = 3;

int ExitCodeFor(ErrorKind kind);

// Runs one invocation; args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nestroot::cli
