#include "artinkms/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "artinkms/error.hpp"

namespace artinkms {

namespace {

void trim_rational(RatPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPolynomial remainder(RatPolynomial a, const RatPolynomial& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor   = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= factor * b[k];
    a.pop_back();
    trim_rational(a);
  }
  return a;
}

RatPolynomial quotient(RatPolynomial a, const RatPolynomial& b) {
  if (a.size() < b.size()) return {};
  RatPolynomial q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor   = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift]          = factor;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= factor * b[k];
    a.pop_back();
    trim_rational(a);
  }
  return q;
}

Rational evaluate_rational(const RatPolynomial& p, const Rational& x) {
  Rational value = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) value = value * x + *it;
  return value;
}

int sign(const Rational& x) {
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> coefficients(degree + 1, BigInt(0));
  coefficients[degree] = c;
  return IntPolynomial(std::move(coefficients));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational IntPolynomial::evaluate(const Rational& t) const {
  Rational value = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) value = value * t + Rational(*it);
  return value;
}

double IntPolynomial::evaluate(double t) const {
  double value = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) value = value * t + it->convert_to<double>();
  return value;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<BigInt> coefficients(k, BigInt(0));
  coefficients.insert(coefficients.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(coefficients));
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> coefficients;
  for (std::size_t k = 1; k < c_.size(); ++k) coefficients.push_back(c_[k] * k);
  return IntPolynomial(std::move(coefficients));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), BigInt(0));
  for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] += other.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), BigInt(0));
  for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] -= other.c_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const BigInt& c = c_[k];
    if (c == 0) continue;
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || magnitude != 1) out << magnitude;
    if (k >= 1) out << "t";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

std::vector<std::string> IntPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.str());
  return out;
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  RatPolynomial ra = to_rational(a);
  RatPolynomial rb = to_rational(b);
  if (!remainder(ra, rb).empty()) return std::nullopt;
  std::vector<BigInt> q;
  for (const auto& c : quotient(ra, rb)) {
    if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
    q.push_back(boost::multiprecision::numerator(c));
  }
  return IntPolynomial(std::move(q));
}

std::vector<BigInt> series_inverse(const IntPolynomial& h, std::size_t terms) {
  const BigInt c0 = h.coefficient(0);
  if (c0 != 1 && c0 != -1) throw Error(ErrorKind::MalformedInput, "series inverse needs constant term +-1");
  std::vector<BigInt> a(terms, BigInt(0));
  for (std::size_t n = 0; n < terms; ++n) {
    BigInt sum = n == 0 ? BigInt(1) : BigInt(0);
    for (std::size_t k = 1; k <= n; ++k) sum -= h.coefficient(k) * a[n - k];
    a[n] = sum * c0;  // c0 is its own inverse
  }
  return a;
}

RatPolynomial to_rational(const IntPolynomial& p) {
  RatPolynomial r;
  r.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) r.emplace_back(c);
  return r;
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  RatPolynomial q = p;
  trim_rational(q);
  if (q.empty()) return {};
  BigInt common_den = 1;
  for (const auto& c : q) {
    const BigInt& d = boost::multiprecision::denominator(c);
    common_den      = common_den / boost::multiprecision::gcd(common_den, d) * d;
  }
  std::vector<BigInt> ints;
  BigInt content = 0;
  for (const auto& c : q) {
    BigInt v = boost::multiprecision::numerator(c) * (common_den / boost::multiprecision::denominator(c));
    content  = boost::multiprecision::gcd(content, v);
    ints.push_back(v);
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return IntPolynomial(std::move(ints));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  RatPolynomial x = to_rational(a);
  RatPolynomial y = to_rational(b);
  while (!y.empty()) {
    RatPolynomial r = remainder(x, y);
    x               = std::move(y);
    y               = std::move(r);
  }
  return primitive_part(x);
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free part of the zero polynomial");
  IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() <= 0) return primitive_part(to_rational(p));
  return primitive_part(quotient(to_rational(p), to_rational(g)));
}

IntPolynomial square_free_lcm(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial g = gcd(a, b);
  if (g.degree() <= 0) return primitive_part(to_rational(a * b));
  return primitive_part(quotient(to_rational(a * b), to_rational(g)));
}

int sign_at(const IntPolynomial& p, const Rational& t) {
  return sign(p.evaluate(t));
}

SturmChain::SturmChain(const IntPolynomial& p) : square_free_(square_free_part(p)) {
  chain_.push_back(to_rational(square_free_));
  chain_.push_back(to_rational(square_free_.derivative()));
  trim_rational(chain_.back());
  while (!chain_.back().empty()) {
    RatPolynomial r = remainder(chain_[chain_.size() - 2], chain_.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    // Positive rescaling keeps the sign pattern and stops coefficient growth.
    IntPolynomial scaled = primitive_part(r);
    if (r.back() < 0) scaled = IntPolynomial() - scaled;
    chain_.push_back(to_rational(scaled));
  }
  if (chain_.back().empty()) chain_.pop_back();
}

std::size_t SturmChain::variations(const Rational& x) const {
  std::size_t changes = 0;
  int last            = 0;
  for (const auto& p : chain_) {
    int s = sign(evaluate_rational(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmChain::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) return 0;
  std::size_t va = variations(a);
  std::size_t vb = variations(b);
  return va >= vb ? va - vb : 0;
}

std::string RootInterval::description() const {
  return "root of " + polynomial.to_string() + " in (" + artinkms::to_string(lo) + ", " + artinkms::to_string(hi)
         + "]";
}

void refine(RootInterval& root, const Rational& width) {
  const IntPolynomial& p = root.polynomial;
  if (!root.exact && sign_at(p, root.hi) == 0) root.exact = true;
  // Integer roots (t = 1 above all) are worth reporting exactly.
  if (!root.exact) {
    BigInt k     = boost::multiprecision::numerator(root.hi) / boost::multiprecision::denominator(root.hi);
    if (Rational(k) > root.hi) --k;
    for (int tries = 0; tries < 64 && Rational(k) > root.lo; ++tries, --k) {
      if (sign_at(p, Rational(k)) == 0) {
        root.hi    = Rational(k);
        root.exact = true;
        break;
      }
    }
  }
  if (root.exact) {
    if (root.hi - root.lo > width) root.lo = root.hi - width;
    root.approx = to_double(root.hi);
    return;
  }
  int s_hi = sign_at(p, root.hi);
  while (root.hi - root.lo > width) {
    Rational mid = (root.lo + root.hi) / 2;
    int s        = sign_at(p, mid);
    if (s == 0) {
      root.hi    = mid;
      root.exact = true;
      if (root.hi - root.lo > width) root.lo = root.hi - width;
      break;
    }
    // The root is simple, so p changes sign across it and nowhere else here.
    if (s != s_hi) {
      root.lo = mid;
    } else {
      root.hi = mid;
      s_hi    = s;
    }
  }
  root.approx = root.exact ? to_double(root.hi) : to_double((root.lo + root.hi) / 2);
}

std::vector<RootInterval> isolate_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi,
                                        const Rational& width) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  SturmChain chain(p);
  std::vector<RootInterval> roots;
  if (chain.polynomial().degree() <= 0) return roots;
  std::vector<std::pair<Rational, Rational>> pending{{lo, hi}};
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    std::size_t n = chain.count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      RootInterval root{chain.polynomial(), a, b};
      refine(root, width);
      roots.push_back(std::move(root));
      continue;
    }
    Rational mid = (a + b) / 2;
    pending.emplace_back(a, mid);
    pending.emplace_back(mid, b);
  }
  std::sort(roots.begin(), roots.end(), [](const RootInterval& x, const RootInterval& y) { return x.hi < y.hi; });
  return roots;
}

Rational cauchy_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "no root bound for the zero polynomial");
  const auto& c = p.coefficients();
  Rational lead = Rational(c.back() < 0 ? BigInt(-c.back()) : c.back());
  Rational best = 0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    Rational v = Rational(c[k] < 0 ? BigInt(-c[k]) : c[k]) / lead;
    best       = std::max(best, v);
  }
  return best + 1;
}

}  // namespace artinkms
