#pragma once

#include <string>

namespace evenzeta {

/// Fixed-point decimal expansion such as "3.14159". The fractional part
/// always has exactly `precision` digits.
struct DecimalString {
  std::string digits;
  int precision = 0;

  const std::string& str() const { return digits; }
  friend bool operator==(const DecimalString&, const DecimalString&) = default;
};

inline constexpr int kMaxPiDigits = 10000;

/// First `precision` fractional digits of pi, truncated. Uses Machin's
/// arctangent formula in pure integer arithmetic with 10 guard digits.
/// Throws std::out_of_range unless 1 <= precision <= 10000.
DecimalString pi_digits(int precision);

}  // namespace evenzeta
