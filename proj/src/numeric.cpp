#include "artinkms/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

#include "artinkms/error.hpp"

namespace artinkms {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// cpp_int reads a leading 0 as octal, so leading zeros are stripped first.
BigInt decimal_digits(std::string_view digits) {
  digits.remove_prefix(std::min(digits.find_first_not_of('0'), digits.size()));
  return digits.empty() ? BigInt(0) : BigInt(std::string(digits));
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative      = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view int_part  = s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part))
      || (dot != std::string_view::npos && !all_digits(frac_part))) {
    throw Error(ErrorKind::MalformedInput, "not a decimal number: '" + std::string(text) + "'");
  }
  BigInt numerator = decimal_digits(std::string(int_part) + std::string(frac_part));
  BigInt denominator = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) denominator *= 10;
  Rational value(numerator, denominator);
  return negative ? Rational(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  bool negative        = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::MalformedInput, "not a rational number: '" + std::string(text) + "'");
  }
  BigInt d = decimal_digits(den);
  if (d == 0) throw Error(ErrorKind::MalformedInput, "zero denominator in '" + std::string(text) + "'");
  Rational value(decimal_digits(num), d);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) {
  return q.convert_to<double>();
}

std::string shortest_decimal(double x) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, x);
  if (ec != std::errc{}) return std::to_string(x);
  return std::string(buffer, end);
}

std::string display_decimal(double x, int significant) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", significant, x);
  return buffer;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b      = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

namespace {

BigInt floor_of(const Rational& x) {
  BigInt q = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
  if (Rational(q) > x) --q;
  return q;
}

// Simplest rational in (a, b); b absent means +infinity.
Rational simplest_in(const Rational& a, const std::optional<Rational>& b) {
  BigInt n = floor_of(a) + 1;
  if (!b || Rational(n) < *b) return Rational(n);
  // a and b share the integer part n - 1; recurse on the reciprocals of the
  // fractional parts.
  BigInt whole = n - 1;
  Rational fa  = a - Rational(whole);
  Rational fb  = *b - Rational(whole);
  std::optional<Rational> upper;
  if (fa != 0) upper = 1 / fa;
  return Rational(whole) + 1 / simplest_in(1 / fb, upper);
}

}  // namespace

Rational simplest_between(const Rational& a, const Rational& b) {
  if (!(a < b) || a < 0) throw Error(ErrorKind::MalformedInput, "simplest_between needs 0 <= a < b");
  return simplest_in(a, b);
}

}  // namespace artinkms
