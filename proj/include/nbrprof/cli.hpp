#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nbrprof::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Runs one invocation; args excludes the program name.
// Returns 0 on success, 1 on usage/validation errors, 2 on data/I-O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nbrprof::cli
