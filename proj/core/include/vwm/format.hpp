#pragma once

#include <string>
#include <string_view>

namespace vwm {

/// Round-trip decimal with 17 significant digits ("%.17g"); "nan"/"inf" for non-finite values.
std::string format_double(double value);

/// Parses a whole token as a double; false on trailing garbage or empty input.
bool parse_double(std::string_view token, double& out) noexcept;

} // namespace vwm
