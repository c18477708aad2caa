#include <doctest.h>

#include "support.hpp"

using namespace covsys;
using testing::P2;
using testing::f2;
using testing::sys;

TEST_CASE("valid irreducible system is a fixed point") {
  // covers both constants with one irreducible modulus used twice
  const auto s = sys(f2(), {{"0", "x^2+x+1"}, {"1", "x^2+x+1"}});
  const auto out = normalize_lemma1(s, 1);
  CHECK(out.system == s);
  CHECK(out.degree_bound == 1);
  CHECK(out.omitted == P2("x"));
  CHECK_FALSE(covers_point(out.system, out.omitted));
}

TEST_CASE("premise violations are reported") {
  // does not cover x+1
  CHECK_THROWS_AS(normalize_lemma1(sys(f2(), {{"1", "x^2+x"}, {"0", "x"}}), 2), PremiseViolated);
  // covers everything
  CHECK_THROWS_AS(normalize_lemma1(sys(f2(), {{"1", "x"}, {"0", "x"}}), 1), PremiseViolated);
}

TEST_CASE("composite moduli are split into prime powers") {
  // witness x: x(x+1) keeps the x+1 part, (x+1)(x^2+x+1) keeps x^2+x+1
  const auto s = sys(f2(), {{"0", "x^2+x"}, {"1", "x^3+1"}});
  const auto out = normalize_lemma1(s, 1);
  CHECK(out.system == sys(f2(), {{"0", "x+1"}, {"1", "x^2+x+1"}}));
  CHECK(out.omitted == P2("x"));
  CHECK(check_lemma1_conditions(out.system, out.omitted, 1).ok());
}

TEST_CASE("squared prime collapses to its reduction") {
  // 0 mod x^2 agrees with the witness mod x; 1 mod x^2+x+1 is left alone
  const auto s = sys(f2(), {{"0", "x^2"}, {"1", "x^2+x+1"}});
  const auto out = normalize_lemma1(s, 1);
  CHECK(check_lemma1_conditions(out.system, out.omitted, 1).ok());
  CHECK(out.system[0].modulus() == P2("x"));
}

TEST_CASE("normalization blocked when every reduction mod p covers the ring") {
  const auto s = sys(f2(), {{"1", "x"}, {"0", "x^2"}});
  CHECK_THROWS_AS(normalize_lemma1(s, 1), NormalizationBlocked);
}

TEST_CASE("condition checker names its failures") {
  const auto s = sys(f2(), {{"1", "x"}, {"x", "x^2"}});
  const auto cond = check_lemma1_conditions(s, P2("0"), 2);
  CHECK(cond.covers_below == false);
  CHECK(cond.omits_witness);
  CHECK_FALSE(cond.irreducible_moduli);
  CHECK_FALSE(cond.failures.empty());
}
