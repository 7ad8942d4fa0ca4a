#include "dacad/format.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/core.h>

namespace dacad {

std::string format_eng(double value, const char* unit, int significant)
{
    if (!std::isfinite(value) || value == 0.0)
        return fmt::format("{} {}", value, unit);

    static constexpr std::array<const char*, 11> prefixes = {"a", "f", "p", "n", "u", "m", "", "k", "M", "G", "T"};
    int exp3 = static_cast<int>(std::floor(std::log10(std::abs(value)) / 3.0));
    exp3 = std::clamp(exp3, -6, 4);
    double scaled = value / std::pow(10.0, 3 * exp3);
    // rounding can push 999.96 up to 1000
    const int digits_left = std::abs(scaled) >= 100 ? 3 : std::abs(scaled) >= 10 ? 2 : 1;
    int decimals = std::max(0, significant - digits_left);
    std::string num = fmt::format("{:.{}f}", scaled, decimals);
    if (std::abs(std::stod(num)) >= 1000 && exp3 < 4) {
        ++exp3;
        scaled = value / std::pow(10.0, 3 * exp3);
        decimals = std::max(0, significant - 1);
        num = fmt::format("{:.{}f}", scaled, decimals);
    }
    return fmt::format("{} {}{}", num, prefixes[exp3 + 6], unit);
}

} // namespace dacad
