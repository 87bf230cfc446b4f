#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace activeinfo {

/// Logarithm base used to report information quantities.
enum class InfoUnit { Bits, Nats, Hartleys };

inline constexpr InfoUnit kDefaultUnit = InfoUnit::Bits;

/// Logarithm of x in the given unit. Uses log2/log/log10 directly so that
/// exact powers of the base produce exact results.
double log_in(InfoUnit unit, double x);

/// Converts an information value between units; infinities pass through.
double convert(double value, InfoUnit from, InfoUnit to);

std::string_view to_string(InfoUnit unit);
std::optional<InfoUnit> parse_unit(std::string_view name);

}  // namespace activeinfo
