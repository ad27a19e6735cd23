#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starcode {

// Exit codes: 0 success or verified-true, 1 verified-false or not
// embeddable, 2 usage or input error, 3 inconclusive (budget exhausted).
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

// argv without the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace starcode
