#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ulab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// args excludes the program name. The serialized result goes to out (or to
// --output), diagnostics and progress to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ulab::cli
