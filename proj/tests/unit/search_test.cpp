#include <doctest.h>

#include "support.hpp"

using namespace covsys;
using testing::f2;

TEST_CASE("all_congruences counts") {
  // degree 1: 2 moduli x 2 residues; degree 2: 4 x 4
  CHECK(all_congruences(f2(), 1).size() == 4);
  CHECK(all_congruences(f2(), 2).size() == 20);
  CHECK(all_congruences(Field::prime(3), 2).size() == 9 + 81);
}

TEST_CASE("multiset_count") {
  CHECK(multiset_count(4, 2) == 10);
  CHECK(multiset_count(20, 3) == 1540);
  CHECK(multiset_count(5, 0) == 1);
}

TEST_CASE("conjecture cover degree") {
  CHECK(conjecture_cover_degree(2, 5) == 5);
  CHECK(conjecture_cover_degree(3, 2) == 2);  // 3^1 < 4 <= 3^2
  CHECK(conjecture_cover_degree(4, 4) == 2);
  CHECK(conjecture_cover_degree(4, 5) == 3);
  CHECK(conjecture_cover_degree(9, 3) == 1);
  CHECK(conjecture_cover_degree(5, 7) == 4);  // 5^3 = 125 < 128
}

TEST_CASE("conjecture search examples are empty") {
  CHECK(conjecture_search(3, 2, 2, BigInt(1) << 24).empty());
  CHECK(conjecture_search(2, 2, 2, BigInt(1) << 24).empty());
  CHECK(conjecture_search(2, 1, 1, BigInt(1) << 24).empty());
  CHECK(conjecture_search(4, 2, 1, BigInt(1) << 24).empty());
}

TEST_CASE("search over the sharp-system pool finds premise hits") {
  const auto r = search_counterexamples(f2(), 2, 2, 2, BigInt(1) << 20);
  CHECK(r.systems_examined == multiset_count(20, 2));
  CHECK(r.premise_hits > 0);
  CHECK(r.counterexamples.empty());
}

TEST_CASE("covering below a lower degree does produce candidates") {
  // two congruences covering only the constants miss most of the ring
  const auto r = search_counterexamples(f2(), 2, 2, 1, BigInt(1) << 20);
  CHECK_FALSE(r.counterexamples.empty());
  for (const auto& s : r.counterexamples) {
    CHECK(coverage_below(s, 1).complete);
    CHECK_FALSE(covers_everything_exact(s).complete);
  }
}

TEST_CASE("search enforces its cap") {
  try {
    search_counterexamples(f2(), 3, 3, 3, 100);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.required() == multiset_count(84, 3));
  }
}

TEST_CASE("verify_theorem finds nothing at desk scale") {
  const auto r = verify_theorem(f2(), 3, 2, BigInt(1) << 24);
  CHECK(r.counterexamples.empty());
  CHECK(r.premise_hits > 0);
  CHECK(r.systems_examined == multiset_count(20, 1) + multiset_count(20, 2) + multiset_count(20, 3));
  const auto r3 = verify_theorem(Field::prime(3), 2, 2, BigInt(1) << 24);
  CHECK(r3.counterexamples.empty());
  // two congruences cover at most 3 + 3 of the 9 polynomials of degree < 2
  CHECK(r3.premise_hits == 0);
}
