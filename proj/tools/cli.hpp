#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace deligne::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes: 0 when no check is falsified (and, under --strict, none undecided),
/// 1 otherwise, 2 on usage, parse or precondition errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deligne::cli
