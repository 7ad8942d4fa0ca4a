#pragma once

#include <string>

namespace dacad {

/// Engineering notation with an SI prefix, e.g. format_eng(3.5565e9, "Hz") == "3.557 GHz".
std::string format_eng(double value, const char* unit, int significant = 4);

} // namespace dacad
