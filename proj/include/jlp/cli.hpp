#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jlp::cli {

// Exit codes: 0 success, 1 reproduction failure, 2 usage, 3 IO,
// 4 numeric failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitReproFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitNumeric = 4;

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace jlp::cli
