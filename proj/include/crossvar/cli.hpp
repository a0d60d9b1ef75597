#pragma once

// Command-line front end. Exit codes: 0 success, 1 numerical failure,
// 2 malformed input or invalid parameters, 3 degenerate sample.

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crossvar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitDegenerate = 3;

struct TwoGroups {
    std::string x_label;
    std::string y_label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Two columns (group, value) separated by a comma, semicolon, tab or
/// spaces; optional header line; blank lines ignored. Groups are taken in
/// order of first appearance. Throws ConfigError naming the offending line.
TwoGroups parse_two_column(std::string_view text);

/// One value per line, optional header. Throws ConfigError naming the line.
std::vector<double> parse_value_list(std::string_view text);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crossvar::cli
