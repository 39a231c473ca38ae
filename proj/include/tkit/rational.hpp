#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "tkit/errors.hpp"

namespace tkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses a non-negative exact number: "12", "0.6", ".5", "3/5" or "1.25e-3".
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return FormatError("not a non-negative number: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp = text.substr(e + 1);
    bool negative = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (exp.empty() || exp.size() > 6) throw fail();
    for (char c : exp) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
      exponent = exponent * 10 + (c - '0');
    }
    if (negative) exponent = -exponent;
  }
  if (!mantissa.empty() && mantissa.front() == '+') mantissa.remove_prefix(1);

  BigInt digits = 0;
  long fraction_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_point) throw fail();
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      seen_digit = true;
      if (seen_point) ++fraction_digits;
    } else {
      throw fail();
    }
  }
  if (!seen_digit) throw fail();

  const long shift = exponent - fraction_digits;
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
  return shift < 0 ? Rational(digits, scale) : Rational(digits * scale);
}

/// Exact text form: integer, terminating decimal, or "p/q".
inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();

  BigInt rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  const unsigned places = twos > fives ? twos : fives;
  const BigInt scaled = num * (boost::multiprecision::pow(BigInt(10), places) / den);
  std::string digits = (scaled < 0 ? BigInt(-scaled) : scaled).str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return (scaled < 0 ? "-" : "") + digits;
}

}  // namespace tkit
