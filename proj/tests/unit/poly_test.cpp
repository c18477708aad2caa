#include <doctest.h>

#include <random>

#include "oracle/naive_poly.hpp"
#include "support.hpp"

using namespace covsys;
using testing::P;
using testing::P2;
using testing::f2;
using testing::f3;

TEST_CASE("multiplication examples") {
  CHECK(P2("x+1") * P2("x+1") == P2("x^2+1"));
  CHECK((Poly(f2()) * P2("x^3+x")).is_zero());
  CHECK(P(f3(), "x+1") * P(f3(), "x+2") == P(f3(), "x^2+2"));
}

TEST_CASE("degree of a product is the sum of degrees") {
  const Field f5 = Field::prime(5);
  CHECK((P(f5, "3*x^4+x") * P(f5, "2*x^3+1")).degree() == 7);
}

TEST_CASE("zero polynomial has degree 0") {
  CHECK(Poly(f2()).degree() == 0);
  CHECK(Poly(f2()).is_zero());
  CHECK(Poly(f2(), {0, 0, 0}).is_zero());
  CHECK(Poly(f2(), {1, 0, 0}).degree() == 0);
}

TEST_CASE("division examples") {
  auto [q, r] = divmod(P2("x^3+x+1"), P2("x^2"));
  CHECK(q == P2("x"));
  CHECK(r == P2("x+1"));

  const Poly a = P2("x^5+x^2+1");
  auto self = divmod(a, a);
  CHECK(self.quotient == Poly::one(f2()));
  CHECK(self.remainder.is_zero());

  auto sq = divmod(P2("x^2+1"), P2("x+1"));
  CHECK(sq.quotient == P2("x+1"));
  CHECK(sq.remainder.is_zero());

  CHECK_THROWS_AS(divmod(a, Poly(f2())), DivisionByZero);
}

TEST_CASE("division identity agrees with the oracle for all small operands") {
  for (int p : {2, 3}) {
    const Field f = Field::prime(p);
    const std::uint64_t limit = p == 2 ? 32 : 243;  // degree <= 4
    for (std::uint64_t ai = 0; ai < limit; ++ai) {
      const Poly a = Poly::from_index(f, ai);
      for (std::uint64_t bi = 1; bi < limit; ++bi) {
        const Poly b = Poly::from_index(f, bi);
        const auto [q, r] = divmod(a, b);
        const bool ok_shape = r.is_zero() || r.degree() < b.degree();
        const auto [oq, orr] = oracle::divmod(oracle::of(a), oracle::of(b), p);
        if (!ok_shape || q * b + r != a || oracle::of(q) != oq || oracle::of(r) != orr) {
          FAIL("divmod mismatch for ", a.to_string(), " / ", b.to_string());
        }
      }
    }
  }
}

TEST_CASE("mixing fields throws") {
  CHECK_THROWS_AS(P2("x") + P(f3(), "x"), FieldMismatch);
  CHECK_THROWS_AS(P2("x") * P(f3(), "x"), FieldMismatch);
}

TEST_CASE("gcd examples") {
  CHECK(gcd(P2("x^2+x"), P2("x")) == P2("x"));
  CHECK(gcd(P2("x"), P2("x+1")) == P2("1"));
  const Poly a = P(f3(), "2*x^2+x");
  CHECK(gcd(a, Poly(f3())) == a.monic());
  CHECK(gcd(a, Poly(f3())).is_monic());
  CHECK_THROWS_AS(gcd(Poly(f2()), Poly(f2())), InvalidArgument);
}

TEST_CASE("extended gcd and modular inverse") {
  const Field f5 = Field::prime(5);
  const Poly a = P(f5, "x^3+2*x+1");
  const Poly b = P(f5, "x^2+3");
  const auto e = extended_gcd(a, b);
  CHECK(e.s * a + e.t * b == e.g);
  CHECK(e.g == gcd(a, b));

  const Poly m = P2("x^3+x+1");
  for (std::uint64_t i = 1; i < 8; ++i) {
    const Poly r = Poly::from_index(f2(), i);
    CHECK((inverse_mod(r, m) * r) % m == Poly::one(f2()));
  }
  CHECK_THROWS_AS(inverse_mod(P2("x"), P2("x^2+x")), NotCoprime);
}

TEST_CASE("lcm and pow") {
  CHECK(lcm(P2("x^2"), P2("x^2+x")) == P2("x^3+x^2"));
  CHECK(pow(P2("x+1"), 4) == P2("x^4+1"));
  CHECK(pow(P2("x"), 0) == Poly::one(f2()));
}

TEST_CASE("CRT examples") {
  std::vector<std::pair<Poly, Poly>> two{{P2("1"), P2("x")}, {P2("0"), P2("x+1")}};
  CHECK(crt_combine(two) == P2("x+1"));

  std::vector<std::pair<Poly, Poly>> one{{P2("x+1"), P2("x^3+x+1")}};
  CHECK(crt_combine(one) == P2("x+1"));

  std::vector<std::pair<Poly, Poly>> mixed{{P2("1"), P2("x")}, {P2("x"), P2("x^2+x+1")}};
  const Poly g = crt_combine(mixed);
  int solutions = 0;
  for (std::uint64_t i = 0; i < 8; ++i) {
    const Poly c = Poly::from_index(f2(), i);
    if (c % P2("x") == P2("1") && c % P2("x^2+x+1") == P2("x")) {
      ++solutions;
      CHECK(c == g);
    }
  }
  CHECK(solutions == 1);

  std::vector<std::pair<Poly, Poly>> bad{{P2("1"), P2("x")}, {P2("0"), P2("x^2")}};
  CHECK_THROWS_AS(crt_combine(bad), NotCoprime);
  CHECK_THROWS_AS(crt_combine(std::span<const std::pair<Poly, Poly>>{}), InvalidArgument);
}

TEST_CASE("CRT result is the unique solution below the product degree") {
  std::mt19937_64 rng(11);
  const auto irr = irreducibles_up_to(f2(), 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Poly> moduli;
    std::size_t total = 0;
    for (const auto& p : irr) {
      if (rng() % 3 == 0) continue;
      const Poly m = pow(p, 1 + rng() % 2);
      if (total + m.degree() > 12) continue;
      total += m.degree();
      moduli.push_back(m);
    }
    if (moduli.empty()) continue;
    std::vector<std::pair<Poly, Poly>> pairs;
    for (const auto& m : moduli) pairs.emplace_back(Poly::from_index(f2(), rng() % (1u << m.degree())), m);
    const Poly g = crt_combine(pairs);
    CHECK(g.degree() < total);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << total); ++i) {
      const auto c = oracle::from_index(i, 2);
      bool all = true;
      for (const auto& [r, m] : pairs) all = all && oracle::rem(oracle::sub(c, oracle::of(r), 2), oracle::of(m), 2).empty();
      if (all) {
        ++hits;
        CHECK(i == g.index());
      }
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("index round trip and ordering") {
  const Field f = Field::prime(3);
  for (std::uint64_t i = 0; i < 81; ++i) CHECK(Poly::from_index(f, i).index() == i);
  CHECK(P2("x") < P2("x+1"));
  CHECK(P2("x+1") < P2("x^2"));
  CHECK(P2("1") < P2("x"));
  CHECK(Poly(f2()) < P2("1"));
}

TEST_CASE("monic and scaled") {
  const Poly a = P(f3(), "2*x^2+1");
  CHECK(a.monic() == P(f3(), "x^2+2"));
  CHECK(a.scaled(FieldElem{2}) == P(f3(), "x^2+2"));
  CHECK_FALSE(a.is_monic());
}

TEST_CASE("text syntax parses and prints") {
  const Field f5 = Field::prime(5);
  CHECK(P(f5, "2*x^2+1").to_string() == "2*x^2+1");
  CHECK(P(f5, " x ^ 3 + 4 * x + 0 ").to_string() == "x^3+4*x");
  CHECK(P(f5, "x+x").to_string() == "2*x");
  CHECK(P(f5, "0").to_string() == "0");
  for (std::uint64_t i = 0; i < 625; i += 7) {
    const Poly a = Poly::from_index(f5, i);
    CHECK(P(f5, a.to_string()) == a);
  }
}

TEST_CASE("parse errors carry a column") {
  try {
    parse_poly(f3(), "x^2+5");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_poly(f3(), ""), ParseError);
  CHECK_THROWS_AS(parse_poly(f3(), "x+"), ParseError);
  CHECK_THROWS_AS(parse_poly(f3(), "x*2"), ParseError);
  CHECK_THROWS_AS(parse_poly(f3(), "2*"), ParseError);
  CHECK_THROWS_AS(parse_poly(Field::of_order(4), "x"), InvalidArgument);
}
