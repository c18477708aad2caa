#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "covsys/field.hpp"
#include "covsys/poly.hpp"
#include "covsys/rational.hpp"

namespace covsys {

struct PrimePower {
  Poly prime;  // monic irreducible
  std::uint32_t exponent = 1;

  Poly value() const { return pow(prime, exponent); }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// unit * prod prime^exponent, factors sorted by (degree, enumeration index).
struct Factorization {
  std::vector<PrimePower> factors;
  FieldElem unit;

  Poly recompose(const Field& field) const;
};

/// Trial division by every monic polynomial of degree <= deg f / 2.
/// Throws InvalidArgument for constant input.
bool is_irreducible(const Poly& f);

/// Complete factorization by trial division. Throws InvalidArgument for zero.
Factorization factor(const Poly& f);

/// Mobius function.
int mobius(std::uint64_t n) noexcept;

/// Number of monic irreducible polynomials of degree d over F_q:
/// (1/d) sum_{k | d} mu(k) q^{d/k}. Throws InvalidArgument for d = 0.
BigInt count_irreducible(std::uint64_t q, std::size_t d);
inline BigInt count_irreducible(const Field& field, std::size_t d) { return count_irreducible(field.order(), d); }

/// Sum of count_irreducible(q, j) for from_degree <= j <= d.
BigInt cumulative_irreducible_count(std::uint64_t q, std::size_t d, std::size_t from_degree = 1);

/// Degree of the n-th monic irreducible (1-based) in (degree, index) order.
std::size_t nth_irreducible_degree(std::uint64_t q, std::uint64_t n);

/// All monic irreducibles of degree 1..d sorted by (degree, enumeration index),
/// found by enumeration and trial division against the smaller irreducibles.
std::vector<Poly> irreducibles_up_to(const Field& field, std::size_t d);

}  // namespace covsys
