#include <doctest.h>

#include "support.hpp"

using namespace covsys;
using testing::P2;
using testing::f2;

TEST_CASE("enumeration examples") {
  std::vector<Poly> got;
  for (const Poly& p : enumerate_degree_below(f2(), 2)) got.push_back(p);
  CHECK(got == std::vector<Poly>{P2("0"), P2("1"), P2("x"), P2("x+1")});
  CHECK(enumerate_degree_below(f2(), 1).size() == 2);
  CHECK(enumerate_degree_below(Field::prime(3), 2).size() == 9);
  CHECK_THROWS_AS(enumerate_degree_below(f2(), 0), InvalidArgument);
}

TEST_CASE("enumeration is a bijection onto indices") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field f = Field::of_order(q);
    std::uint64_t expected = 0;
    for (const Poly& p : enumerate_degree_below(f, 4)) {
      CHECK(p.index() == expected);
      CHECK((p.is_zero() || p.degree() < 4));
      ++expected;
    }
    CHECK(expected == std::uint64_t{q} * q * q * q);
  }
}

TEST_CASE("monic_of_degree") {
  const auto r = monic_of_degree(Field::prime(3), 2);
  CHECK(r.size() == 9);
  for (const Poly& p : r) {
    CHECK(p.degree() == 2);
    CHECK(p.is_monic());
  }
}

TEST_CASE("checked_power") {
  CHECK(checked_power(3, 4) == 81);
  CHECK(checked_power(2, 63) == std::uint64_t{1} << 63);
  CHECK_THROWS_AS(checked_power(2, 64), InvalidArgument);
}
