#include <doctest.h>

#include <random>

#include "artinkms/oracle_suite.hpp"
#include "artinkms/reversing.hpp"
#include "support.hpp"

using namespace artinkms;
using test::w;

TEST_CASE("atom complements") {
  const auto b3 = test::fixture("b3");
  const auto& m = b3.matrix();
  CHECK(atom_complement(m, 0, 1) == Word{1, 0});
  CHECK(atom_complement(m, 0, 0) == Word{});
  CHECK(atom_complement(test::fixture("raam_path3").matrix(), 0, 1) == Word{1});
  CHECK_FALSE(atom_complement(test::fixture("free2").matrix(), 0, 1).has_value());
}

TEST_CASE("lcm examples") {
  const auto& b3 = test::engine("b3");
  auto r         = lcm(b3, w("b3", "s1"), w("b3", "s2"));
  REQUIRE(r.found());
  CHECK(r.lcm == w("b3", "s1.s2.s1"));
  CHECK(r.comp_left == w("b3", "s2.s1"));
  CHECK(r.comp_right == w("b3", "s1.s2"));

  CHECK(lcm(test::engine("free2"), w("free2", "s1"), w("free2", "s2")).tag == LcmTag::NoCommonMultiple);

  auto r2 = lcm(b3, w("b3", "s1"), w("b3", "s2.s1"));
  REQUIRE(r2.found());
  CHECK(b3.equal(r2.lcm, w("b3", "s1.s2.s1")));

  auto same = lcm(b3, w("b3", "s1.s2"), w("b3", "s1.s2"));
  CHECK(same.lcm == w("b3", "s1.s2"));
  CHECK(same.comp_left.empty());
}

TEST_CASE("lcm_set") {
  const auto& b4 = test::engine("b4");
  std::vector<Word> all{w("b4", "s1"), w("b4", "s2"), w("b4", "s3")};
  auto r = lcm_set(b4, all);
  REQUIRE(r.found());
  CHECK(r.lcm.size() == 6);
  CHECK(b4.equal(r.lcm, w("b4", "s3.s2.s1.s3.s2.s3")));

  std::vector<Word> one{w("b4", "s2.s1")};
  CHECK(lcm_set(b4, one).lcm == w("b4", "s2.s1"));
  std::vector<Word> far{w("b4", "s1"), w("b4", "s3")};
  CHECK(lcm_set(b4, far).lcm == w("b4", "s1.s3"));
}

TEST_CASE("affine triple does not close within the cap") {
  const auto& e = test::engine("a2tilde");
  std::vector<Word> all{w("a2tilde", "s1"), w("a2tilde", "s2"), w("a2tilde", "s3")};
  CHECK(lcm_set(e, all, 20000).tag == LcmTag::Inconclusive);
}

TEST_CASE("oracle lcm") {
  const auto& b3 = test::engine("b3");
  CHECK(oracle_lcm(b3, w("b3", "s1"), w("b3", "s2"), 6).lcm == w("b3", "s1.s2.s1"));
  CHECK(oracle_lcm(b3, w("b3", "s2.s1"), w("b3", "s2.s1"), 6).lcm == w("b3", "s2.s1"));
  auto o = oracle_lcm(b3, w("b3", "s2.s1"), w("b3", "s1.s2"), 8);
  auto r = lcm(b3, w("b3", "s2.s1"), w("b3", "s1.s2"));
  REQUIRE(o.found());
  CHECK(o.lcm == r.lcm);
  CHECK(oracle_lcm(test::engine("free2"), w("free2", "s1"), w("free2", "s2"), 6).tag == LcmTag::Inconclusive);
}

TEST_CASE("lcm properties on random pairs") {
  std::mt19937_64 rng(13);
  for (const char* name : {"b3", "b4", "i2_4", "i2_5", "raam_path3", "direct_b3_a1", "free_b3_a1"}) {
    const auto& e = test::engine(name);
    for (int trial = 0; trial < 100; ++trial) {
      Word p = test::random_word(rng, e.rank(), 4), q = test::random_word(rng, e.rank(), 4);
      auto r = lcm(e, p, q);
      auto s = lcm(e, q, p);
      REQUIRE(r.tag != LcmTag::Inconclusive);
      CHECK(r.tag == s.tag);
      if (!r.found()) continue;
      CHECK(e.equal(concat(p, r.comp_left), r.lcm));
      CHECK(e.equal(concat(q, r.comp_right), r.lcm));
      CHECK(e.left_divides(p, r.lcm));
      CHECK(e.left_divides(q, r.lcm));
      CHECK(r.lcm == s.lcm);
    }
  }
}

TEST_CASE("finite-type atom subsets always close") {
  for (const char* name : {"b3", "b4", "i2_5", "direct_b3_b3"}) {
    const auto& e = test::engine(name);
    for (std::size_t s = 0; s < e.rank(); ++s) {
      for (std::size_t t = 0; t < e.rank(); ++t) {
        for (std::size_t u = 0; u < e.rank(); ++u) {
          std::vector<Word> K{Word{static_cast<Letter>(s)}, Word{static_cast<Letter>(t)}, Word{static_cast<Letter>(u)}};
          CHECK(lcm_set(e, K).found());
        }
      }
    }
  }
}

TEST_CASE("reversing agrees with the multiples table") {
  for (const char* name : {"b3", "i2_4", "raam_path3", "free_b3_a1"}) {
    const auto& e = test::engine(name);
    Ball ball(e, 5);
    auto agreement = lcm_agreement(e, ball, 2);
    INFO(name << ": " << agreement.detail);
    CHECK(agreement.ok());
    CHECK(agreement.conclusive > 0);
    CHECK(agreement.agreements == agreement.conclusive);
  }
}
