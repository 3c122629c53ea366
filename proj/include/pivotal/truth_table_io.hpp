#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pivotal/boolean_function.hpp"

namespace pivotal {

/// Truth-table file format:
///
///     n=<k>
///     <2^k characters from {0,1}>
///
/// Character j is f at configuration index j; ω(1) is the least significant
/// bit of the index. A trailing newline is optional; anything else (wrong
/// length, stray characters, extra lines) is rejected with std::runtime_error.
BooleanFunction parse_truth_table(std::string_view text);
BooleanFunction read_truth_table(const std::filesystem::path& path);

std::string format_truth_table(const BooleanFunction& f);
void write_truth_table(const std::filesystem::path& path, const BooleanFunction& f);

}  // namespace pivotal
