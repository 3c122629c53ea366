#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pivotal/check_result.hpp"

namespace pivotal::cli {

// Exit codes: 0 all applicable checks hold, 1 some check failed,
// 2 usage, parse, domain or cap error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

/// 0 if every applicable check holds, else 1.
int check_exit_code(const CheckList& checks);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pivotal::cli
