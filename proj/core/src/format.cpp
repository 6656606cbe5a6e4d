#include "vwm/format.hpp"

#include <charconv>
#include <cmath>

namespace vwm {

std::string format_double(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto const [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, end);
}

bool parse_double(std::string_view token, double& out) noexcept
{
    if (token.empty())
        return false;
    // from_chars rejects a leading '+', which some exporters emit
    if (token.front() == '+')
        token.remove_prefix(1);
    auto const [end, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && end == token.data() + token.size();
}

} // namespace vwm
