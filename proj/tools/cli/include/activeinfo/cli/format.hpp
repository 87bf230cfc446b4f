#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace activeinfo::cli {

/// 17 significant digits, "%g"-style; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double x);

/// Fixed-point with `digits` decimals (used for SVG coordinates).
std::string format_fixed(double x, int digits);

/// Parses a whole string as a double; no leading/trailing junk.
bool parse_double(std::string_view s, double& out);

std::vector<std::string> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);

}  // namespace activeinfo::cli
