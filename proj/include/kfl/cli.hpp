#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kfl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitResourceLimit = 3;

/// Runs one command. args excludes the program name. Results go to out,
/// diagnostics to err. Returns 0 when a result was computed (including NO and
/// UNKNOWN verdicts), 2 on invalid input and 3 when a resource ceiling was hit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kfl::cli
