#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "artinkms/error.hpp"
#include "artinkms/polynomial.hpp"

using namespace artinkms;

namespace {

IntPolynomial poly(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace

TEST_CASE("basic arithmetic") {
  auto h = poly({1, -2, 0, 1});
  CHECK(h.degree() == 3);
  CHECK(h.to_string() == "1 - 2t + t^3");
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({}).degree() == -1);
  CHECK(h.evaluate(q(4, 5)) == q(-11, 125));
  CHECK(std::abs(h.evaluate(0.8) + 0.088) < 1e-12);
  CHECK(poly({1, -1}) * poly({1, 1}) == poly({1, 0, -1}));
  CHECK(h.shifted(2) == poly({0, 0, 1, -2, 0, 1}));
  CHECK(h.derivative() == poly({-2, 0, 3}));
  CHECK(poly({1, -3, 1, 2, 0, 0, -1}).to_string() == "1 - 3t + t^2 + 2t^3 - t^6");
}

TEST_CASE("exact division and factorisation") {
  auto h = poly({1, -3, 1, 2, 0, 0, -1});
  auto f = exact_divide(h, poly({1, -1}));
  REQUIRE(f.has_value());
  CHECK(*f == poly({1, -2, -1, 1, 1, 1}));
  CHECK_FALSE(exact_divide(h, poly({1, 1})).has_value());
  CHECK_FALSE(exact_divide(poly({1, 0, 1}), poly({0, 2})).has_value());
}

TEST_CASE("series inverse") {
  auto s = series_inverse(poly({1, -2, 0, 1}), 6);
  CHECK(s == std::vector<BigInt>{1, 2, 4, 7, 12, 20});
  CHECK(series_inverse(poly({1, -1}), 4) == std::vector<BigInt>{1, 1, 1, 1});
}

TEST_CASE("gcd and square-free parts") {
  auto a = poly({1, -1}) * poly({1, -1}) * poly({2, 1});
  CHECK(square_free_part(a) == poly({-2, 1, 1}));  // leading coefficient positive
  CHECK(gcd(poly({1, 0, -1}), poly({-1, 1})) == poly({-1, 1}));
  CHECK(square_free_lcm(poly({-1, 1}), poly({1, 0, -1})) == poly({-1, 0, 1}));
}

TEST_CASE("root isolation examples") {
  auto roots = isolate_roots(poly({1, -2, 0, 1}), q(0), q(1));
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0].approx - (std::sqrt(5.0) - 1) / 2) < 1e-10);
  CHECK(roots[0].hi - roots[0].lo <= kDefaultRootWidth);
  CHECK(roots[1].exact);
  CHECK(roots[1].hi == q(1));

  auto one = isolate_roots(poly({1, -1}), q(0), q(2));
  REQUIRE(one.size() == 1);
  CHECK(one[0].exact);

  auto quintic = isolate_roots(poly({1, -2, -1, 1, 1, 1}), q(0), q(1));
  REQUIRE(quintic.size() == 2);
  CHECK(std::abs(quintic[0].approx - 0.479205) < 1e-6);
  CHECK(std::abs(quintic[1].approx - 0.796094) < 1e-6);

  CHECK_THROWS_AS(isolate_roots(poly({}), q(0), q(1)), Error);
}

TEST_CASE("refinement honours the requested width") {
  auto roots = isolate_roots(poly({-2, 0, 1}), q(0), q(2), q(1, 1000));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].hi - roots[0].lo <= q(1, 1000));
  refine(roots[0], q(1, 1000000000));
  CHECK(roots[0].hi - roots[0].lo <= q(1, 1000000000));
  CHECK(std::abs(roots[0].approx - std::sqrt(2.0)) < 1e-9);
  CHECK(sign_at(roots[0].polynomial, roots[0].lo) * sign_at(roots[0].polynomial, roots[0].hi) <= 0);
}

TEST_CASE("sturm counts of products of known linear factors") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> numer(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<int> roots;
    int k = 1 + trial % 5;
    while (static_cast<int>(roots.size()) < k) roots.insert(numer(rng));
    IntPolynomial p = poly({1});
    for (int r : roots) p = p * poly({-r, 4});  // root r/4
    SturmChain chain(p);
    CHECK(chain.count(q(-6), q(6)) == roots.size());
    auto iso = isolate_roots(p, q(-6), q(6));
    REQUIRE(iso.size() == roots.size());
    auto it = roots.begin();
    for (const auto& r : iso) {
      Rational root = q(*it++, 4);
      CHECK(r.lo < root);
      CHECK(root <= r.hi);
    }
  }
}

TEST_CASE("sturm counts against dense sign sampling") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> c(1 + trial % 7);
    for (auto& x : c) x = coef(rng);
    c.back() = c.back() == 0 ? 1 : c.back();
    IntPolynomial p(c);
    // Roots of even multiplicity do not change sign, so only square-free p.
    if (p.degree() < 1 || gcd(p, p.derivative()).degree() > 0) continue;
    const Rational lo = q(-3), hi = q(3);
    std::size_t changes = 0;
    int previous = sign_at(p, lo);
    bool endpoint_root = previous == 0 || sign_at(p, hi) == 0;
    for (int k = 1; k <= 6000; ++k) {
      int s = sign_at(p, lo + (hi - lo) * q(k, 6000));
      if (s != 0 && previous != 0 && s != previous) ++changes;
      if (s != 0) previous = s;
    }
    std::size_t sturm = SturmChain(p).count(lo, hi);
    CHECK(changes <= sturm);
    if (!endpoint_root) CHECK((sturm - changes) % 2 == 0);
    CHECK(isolate_roots(p, lo, hi).size() == sturm);
  }
}

TEST_CASE("cauchy bound contains every root") {
  auto p = poly({-30, 1, 1});  // roots 5 and -6
  Rational b = cauchy_bound(p);
  CHECK(b >= q(6));
  CHECK(isolate_roots(p, -b - 1, b).size() == 2);
}

TEST_CASE("simplest rational between") {
  CHECK(simplest_between(q(0), q(1)) == q(1, 2));
  CHECK(simplest_between(q(1, 3), q(1, 2)) == q(2, 5));
  CHECK(simplest_between(q(3, 5), q(2, 3)) == q(5, 8));
  CHECK(simplest_between(q(1), q(3)) == q(2));
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(1, 50);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = q(d(rng), d(rng)), b = a + q(1, d(rng) * d(rng));
    Rational s = simplest_between(a, b);
    CHECK(s > a);
    CHECK(s < b);
  }
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("2/3") == q(2, 3));
  CHECK(parse_rational("0.75") == q(3, 4));
  CHECK(parse_rational("-4") == q(-4));
  CHECK(parse_rational("010/08") == q(5, 4));
  CHECK(parse_decimal("0.05") == q(1, 20));
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_decimal("1/2"), Error);
  CHECK(to_string(q(6, 4)) == "3/2");
  CHECK(to_string(q(5)) == "5");
  CHECK(shortest_decimal(0.1) == "0.1");
}
