#include "glyphplot/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace glyphplot {

namespace {

constexpr double kPow10[] = {1.0, 10.0, 100.0, 1000.0, 10000.0,
                             100000.0, 1000000.0};
constexpr long long kPow10LL[] = {1, 10, 100, 1000, 10000, 100000, 1000000};
constexpr int kMaxDecimals = 6;

std::string trim_fixed(char* buf) {
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

double round_half_up(double value, int decimals) {
  if (decimals < 0 || decimals > kMaxDecimals) {
    throw std::invalid_argument("round_half_up: unsupported decimal count");
  }
  const double scale = kPow10[decimals];
  return std::floor(value * scale + 0.5) / scale;
}

std::string format_number(double value, int max_decimals) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("format_number: non-finite value");
  }
  if (max_decimals < 0 || max_decimals > kMaxDecimals) {
    throw std::invalid_argument("format_number: unsupported decimal count");
  }
  const double scaled = value * kPow10[max_decimals];
  if (std::fabs(scaled) >= 9.0e15) {
    // Out of exact integer range; screen coordinates never get here.
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", max_decimals, value);
    return trim_fixed(buf);
  }
  long long units = static_cast<long long>(std::floor(scaled + 0.5));
  if (units == 0) return "0";
  const bool negative = units < 0;
  unsigned long long magnitude =
      negative ? 0ULL - static_cast<unsigned long long>(units)
               : static_cast<unsigned long long>(units);
  const unsigned long long scale_ll =
      static_cast<unsigned long long>(kPow10LL[max_decimals]);
  unsigned long long int_part = magnitude / scale_ll;
  unsigned long long frac_part = magnitude % scale_ll;

  std::string out;
  if (negative) out.push_back('-');
  out += std::to_string(int_part);
  if (frac_part != 0) {
    std::string frac = std::to_string(frac_part);
    frac.insert(frac.begin(), max_decimals - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out.push_back('.');
    out += frac;
  }
  return out;
}

std::string format_fixed(double value, int decimals) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("format_fixed: non-finite value");
  }
  if (decimals < 0 || decimals > kMaxDecimals) {
    throw std::invalid_argument("format_fixed: unsupported decimal count");
  }
  const double rounded = round_half_up(value, decimals);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, rounded);
  std::string s(buf);
  if (s.rfind("-0", 0) == 0 && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(s.begin());  // "-0.0" -> "0.0"
  }
  return s;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace glyphplot
