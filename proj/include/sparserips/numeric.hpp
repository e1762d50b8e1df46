#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace sparse_rips {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Shortest decimal text that parses back to exactly `value`; "inf" for +infinity.
std::string format_real(double value);

/// Parses a full token as a double ("inf" accepted). Returns nullopt on any trailing junk.
std::optional<double> parse_real(std::string_view token);

}  // namespace sparse_rips
