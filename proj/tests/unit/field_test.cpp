#include <doctest.h>

#include "support.hpp"

using namespace covsys;

TEST_CASE("prime field arithmetic matches integers mod p") {
  const Field f = Field::prime(7);
  CHECK(f.order() == 7);
  CHECK(f.is_prime_field());
  for (std::uint32_t a = 0; a < 7; ++a) {
    for (std::uint32_t b = 0; b < 7; ++b) {
      CHECK(f.add(FieldElem{a}, FieldElem{b}).value == (a + b) % 7);
      CHECK(f.sub(FieldElem{a}, FieldElem{b}).value == (a + 7 - b) % 7);
      CHECK(f.mul(FieldElem{a}, FieldElem{b}).value == (a * b) % 7);
    }
    if (a) CHECK(f.mul(FieldElem{a}, f.inv(FieldElem{a})) == f.one());
  }
  CHECK_THROWS_AS(f.inv(f.zero()), InvalidArgument);
  CHECK(f.from_integer(-1).value == 6);
  CHECK(f.from_integer(15).value == 1);
}

TEST_CASE("non-prime or oversized characteristic is rejected") {
  CHECK_THROWS_AS(Field::prime(1), InvalidArgument);
  CHECK_THROWS_AS(Field::prime(9), InvalidArgument);
  CHECK_THROWS_AS(Field::of_order(6), InvalidArgument);
  CHECK_THROWS_AS(Field::of_order(1), InvalidArgument);
  CHECK_NOTHROW(Field::prime(Field::kMaxPrime));
}

TEST_CASE("of_order picks prime or extension") {
  const Field f9 = Field::of_order(9);
  CHECK(f9.characteristic() == 3);
  CHECK(f9.degree() == 2);
  CHECK(f9.order() == 9);
  CHECK(f9.desc().q() == 9);
  CHECK(f9.desc().ext_modulus.size() == 3);  // monic, degree 2
  CHECK(f9.desc().ext_modulus.back() == 1);
  CHECK(Field::of_order(5).is_prime_field());
}

TEST_CASE("default extension modulus for F_4 is y^2+y+1") {
  const Field f4 = Field::extension(2, 2);
  CHECK(f4.desc().ext_modulus == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("reducible extension modulus is rejected") {
  // y^2+1 = (y+1)^2 over F_2
  CHECK_THROWS_AS(Field::extension(2, 2, std::vector<std::uint32_t>{1, 0, 1}), InvalidArgument);
  // wrong degree
  CHECK_THROWS_AS(Field::extension(2, 2, std::vector<std::uint32_t>{1, 1}), InvalidArgument);
}

TEST_CASE("extension field axioms hold exhaustively") {
  for (std::uint64_t q : {4u, 8u, 9u, 16u}) {
    CAPTURE(q);
    const Field f = Field::of_order(q);
    const auto p = f.characteristic();
    for (std::uint32_t a = 0; a < q; ++a) {
      const FieldElem x{a};
      CHECK(f.digits(x).size() == f.degree());
      CHECK(f.from_digits(f.digits(x)) == x);
      CHECK(f.add(x, f.neg(x)) == f.zero());
      if (a) CHECK(f.mul(x, f.inv(x)) == f.one());
      // characteristic p: p*x = 0
      FieldElem sum = f.zero();
      for (std::uint32_t i = 0; i < p; ++i) sum = f.add(sum, x);
      CHECK(sum == f.zero());
      for (std::uint32_t b = 0; b < q; b += 3) {
        const FieldElem y{b};
        CHECK(f.mul(x, y) == f.mul(y, x));
        for (std::uint32_t c = 0; c < q; c += 5) {
          const FieldElem z{c};
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
          CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
        }
      }
    }
  }
}

TEST_CASE("fields compare by description") {
  CHECK(Field::prime(3) == Field::prime(3));
  CHECK_FALSE(Field::prime(3) == Field::prime(5));
  CHECK(Field::from_desc(Field::of_order(8).desc()) == Field::of_order(8));
  CHECK(Field() == Field::prime(2));
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65535));
}
