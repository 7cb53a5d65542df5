#pragma once

#include <string>
#include <string_view>

namespace glyphplot {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTau = 2.0 * kPi;
inline constexpr double kDegToRad = kPi / 180.0;

inline double deg_to_rad(double degrees) { return degrees * kDegToRad; }

// Rounds half-up (toward +inf) at the given number of decimals.
double round_half_up(double value, int decimals);

// Formats with at most `max_decimals` decimals, half-up rounding, trailing
// zeros trimmed. "-0" never appears. All emitted path and attribute numbers
// go through this so output is byte-deterministic.
std::string format_number(double value, int max_decimals = 4);

// Fixed decimal count, half-up rounding, zeros kept (e.g. "50.0").
std::string format_fixed(double value, int decimals);

std::string xml_escape(std::string_view text);

}  // namespace glyphplot
