#include "stabkit/exact.hpp"

#include <cstdio>

#include "stabkit/errors.hpp"

namespace stabkit {

ExactInteger ipow(const ExactInteger& base, std::uint64_t exponent) {
  ExactInteger result = 1;
  ExactInteger factor = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1U;
    if (exponent != 0) factor *= factor;
  }
  return result;
}

ExactRational rpow(const ExactInteger& base, std::int64_t exponent) {
  if (exponent >= 0) return ExactRational(ipow(base, static_cast<std::uint64_t>(exponent)));
  if (base == 0) throw InvalidArgument("rpow: zero to a negative power");
  return ExactRational(ExactInteger(1), ipow(base, static_cast<std::uint64_t>(-exponent)));
}

std::string to_fraction_string(const ExactRational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

ExactRational parse_fraction(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
      }
    }
    return ExactInteger(std::string(s.front() == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_int(text));
  ExactInteger num = parse_int(text.substr(0, slash));
  ExactInteger den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("rational with zero denominator: '" + std::string(text) + "'");
  return ExactRational(num, den);
}

double to_double(const ExactRational& value) { return value.convert_to<double>(); }

std::string to_decimal_string(const ExactRational& value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, to_double(value));
  return buf;
}

}  // namespace stabkit
