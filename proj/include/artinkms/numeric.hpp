// Exact integer and rational scalars.

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace artinkms {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "12", "-3", "0.75", "1/3". Throws Error(MalformedInput).
Rational parse_rational(std::string_view text);

// Parses a decimal literal only ("2", "0.5"); fractions are rejected.
Rational parse_decimal(std::string_view text);

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// Shortest decimal that round-trips through double.
std::string shortest_decimal(double x);

// Fixed number of significant digits, for human-facing text output.
std::string display_decimal(double x, int significant = 12);

Rational pow(const Rational& base, unsigned exponent);

// The rational with the smallest denominator in the open interval (a, b),
// for 0 <= a < b.
Rational simplest_between(const Rational& a, const Rational& b);

}  // namespace artinkms
