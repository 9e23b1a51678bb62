#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "janowski/errors.hpp"

namespace janowski {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Greatest integer <= x.
inline BigInt floor_rational(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline std::string format_rational(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Parses "p/q", plain integers, and finite decimals ("0.25" -> 1/4).
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    if (digits.empty() || digits == "-" || digits == "+")
      throw ParseError("malformed number '" + text + "'");
    // leading zeros would make cpp_int read the digits as octal
    std::string sign;
    if (digits[0] == '-' || digits[0] == '+') {
      sign = digits[0];
      digits.erase(0, 1);
    }
    const auto first = digits.find_first_not_of('0');
    digits = (first == std::string::npos) ? "0" : digits.substr(first);
    return Rational(BigInt(sign + digits), den);
  } catch (const std::runtime_error&) {
    throw ParseError("cannot parse rational '" + text + "'");
  }
}

inline double to_double(const Rational& x) {
  return static_cast<double>(x);
}

}  // namespace janowski
