#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "covsys/congruence.hpp"
#include "covsys/coverage.hpp"
#include "covsys/rational.hpp"

namespace covsys {

/// Every congruence with a monic modulus of degree 1..max_modulus_degree and
/// any reduced residue, ordered by (modulus, residue) enumeration index.
std::vector<Congruence> all_congruences(const Field& field, std::size_t max_modulus_degree);

/// Number of size-k multisets drawn from n items.
BigInt multiset_count(std::uint64_t n, std::uint64_t k);

struct SearchResult {
  BigInt systems_examined = 0;
  BigInt premise_hits = 0;  // systems covering every polynomial of degree < cover_degree
  std::vector<CongruenceSystem> counterexamples;
};

/// Exhausts every multiset of `size` congruences from all_congruences(field,
/// max_modulus_degree) and keeps those that cover all polynomials of degree
/// < cover_degree without covering F_q[x]. Throws CapExceeded when the number of
/// systems exceeds `cap`.
SearchResult search_counterexamples(const Field& field, std::size_t size, std::size_t max_modulus_degree,
                                    std::size_t cover_degree, const BigInt& cap);

/// Runs search_counterexamples for every size 1..max_size with cover_degree = size.
SearchResult verify_theorem(const Field& field, std::size_t max_size, std::size_t max_modulus_degree,
                            const BigInt& cap);

/// Least D with q^D >= 2^n, i.e. ceil(n / log2 q) computed exactly.
std::size_t conjecture_cover_degree(std::uint64_t q, std::size_t n);

/// Systems of n congruences (moduli of degree <= degree_budget) that cover every
/// polynomial of degree < conjecture_cover_degree(q, n) but not all of F_q[x].
/// An empty result means the conjectured bound survives at this scale.
std::vector<CongruenceSystem> conjecture_search(std::uint64_t q, std::size_t n, std::size_t degree_budget,
                                                const BigInt& cap);

}  // namespace covsys
