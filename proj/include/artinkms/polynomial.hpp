// Univariate polynomials with exact coefficients, and Sturm-sequence real
// root isolation.
//
// IntPolynomial holds the inclusion-exclusion polynomials g_J(t) and the
// clique polynomial.  Division, gcd and Sturm chains need a field, so they
// run over RatPolynomial.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "artinkms/numeric.hpp"

namespace artinkms {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  // c * t^degree
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);

  // Coefficients by degree, trailing zeros removed; empty for the zero polynomial.
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }

  bool is_zero() const noexcept { return c_.empty(); }

  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

  BigInt coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

  Rational evaluate(const Rational& t) const;
  double   evaluate(double t) const;

  // Multiplication by t^k.
  IntPolynomial shifted(std::size_t k) const;

  IntPolynomial derivative() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  bool operator==(const IntPolynomial&) const = default;

  // "1 - 2t + t^3"
  std::string to_string() const;

  // Coefficients as decimal strings, lowest degree first.
  std::vector<std::string> coefficient_strings() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Exact quotient a / b when b divides a over the integers.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b);

// First `terms` coefficients of the power series 1/h.  Requires h(0) = +-1.
std::vector<BigInt> series_inverse(const IntPolynomial& h, std::size_t terms);

// Rational-coefficient polynomial, used for gcd and Sturm chains.
using RatPolynomial = std::vector<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

// Primitive integer polynomial with positive leading coefficient and the same roots.
IntPolynomial primitive_part(const RatPolynomial& p);

// gcd over the rationals, returned as a primitive integer polynomial.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// p / gcd(p, p'), primitive.
IntPolynomial square_free_part(const IntPolynomial& p);

// lcm of two square-free polynomials, primitive.
IntPolynomial square_free_lcm(const IntPolynomial& a, const IntPolynomial& b);

int sign_at(const IntPolynomial& p, const Rational& t);

class SturmChain {
 public:
  // p must be nonzero; it is replaced by its square-free part.
  explicit SturmChain(const IntPolynomial& p);

  const IntPolynomial& polynomial() const noexcept { return square_free_; }

  // Number of distinct real roots in (a, b], a < b.
  std::size_t count(const Rational& a, const Rational& b) const;

 private:
  std::size_t variations(const Rational& x) const;

  IntPolynomial              square_free_;
  std::vector<RatPolynomial> chain_;
};

struct RootInterval {
  IntPolynomial polynomial;  // square-free; exactly one root in (lo, hi]
  Rational      lo;
  Rational      hi;
  bool          exact = false;  // the root is hi itself
  double        approx = 0.0;

  std::string description() const;
};

inline const Rational kDefaultRootWidth{BigInt(1), BigInt("1000000000000")};

// All distinct real roots in (lo, hi], ascending, each refined to an interval
// of width <= width.  Throws ZeroPolynomial.
std::vector<RootInterval> isolate_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi,
                                        const Rational& width = kDefaultRootWidth);

// Shrinks the interval of a single root by bisection until it is at most
// `width` wide.  root.polynomial must be square-free.
void refine(RootInterval& root, const Rational& width);

// Every real root lies in [-B, B].
Rational cauchy_bound(const IntPolynomial& p);

}  // namespace artinkms
