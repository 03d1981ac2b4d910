#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace stabkit {

using ExactInteger = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

ExactInteger ipow(const ExactInteger& base, std::uint64_t exponent);

/// base^exponent for a possibly negative exponent; base must be nonzero when
/// exponent < 0.
ExactRational rpow(const ExactInteger& base, std::int64_t exponent);

/// "p/q" with q > 0, always including the denominator.
std::string to_fraction_string(const ExactRational& value);

/// Inverse of to_fraction_string; also accepts a bare integer "p".
ExactRational parse_fraction(std::string_view text);

/// Advisory decimal rendering, `digits` significant digits.
std::string to_decimal_string(const ExactRational& value, int digits = 12);

double to_double(const ExactRational& value);

}  // namespace stabkit
