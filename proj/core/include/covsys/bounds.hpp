#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "covsys/rational.hpp"

namespace covsys {

/// k residue classes modulo an irreducible of the given degree.
struct ClassGroup {
  std::uint32_t degree = 1;
  BigInt classes = 0;
};

/// Input to the inclusion-exclusion bound. Groups are sorted by ascending degree;
/// the first `split` groups enter as a sum, the rest as a product.
struct BoundInstance {
  std::uint64_t q = 2;
  std::uint32_t n = 1;
  std::vector<ClassGroup> groups;
  std::size_t split = 1;
};

/// Throws InvalidArgument unless 1 <= split <= groups.size(), groups are sorted
/// by degree, and 0 <= k_i < q^{d_i}.
void validate(const BoundInstance& inst);

/// 1 + q^n (1 - sum_{i<=s} k_i/q^{d_i}) prod_{i>s} (1 - k_i/q^{d_i})
///   - (1 + sum_{i<=s} k_i) prod_{i>s} (1 + k_i).
/// The number of degree < n polynomials avoiding every class exceeds this value
/// whenever some k_i > 0, and equals it (= q^n) when every k_i = 0.
Rational lemma_ie_bound(const BoundInstance& inst);

struct CountBound {
  BigInt lhs;
  Rational rhs;
  bool holds = false;
};

/// Cumulative irreducible count up to degree d (from degree 2 or from degree 1)
/// against 3 * 2^{d-3} for q = 2 and (q-1)/(2q) q^d otherwise. Requires d >= 2.
CountBound lemma3_bound_check(std::uint64_t q, std::uint32_t d, bool from_degree_two = true);

struct AmGmBound {
  std::uint32_t split = 0;
  Rational value;
};

/// s = min(ceil(n/3 - 1), t - 1) and ((n + s + 1)/(s + 1))^{s + 1}.
AmGmBound amgm_rhs_bound(std::uint32_t n, std::uint64_t t);

/// The split index ceil(n/3 - 1), clamped at 0.
std::uint32_t proof_split(std::uint32_t n) noexcept;

/// prod (1 - k_i/q^{d_i}) over the first proof_split(n) irreducibles of degree >= 2
/// in ascending degree, each loaded with its maximal multiplicity k = d - 1.
Rational worst_case_product(std::uint64_t q, std::uint32_t n);

/// Exchange steps of the adjustment argument. Case i (d1 == d2,
/// 1 <= k1 <= k2 < d2 - 1): moving a class from the first modulus to the second
/// lowers the product. Case ii (d1 < d2, 0 <= k1 < d1 - 1, 0 <= k2 <= d2): moving a
/// class from the higher degree to the lower lowers it. nullopt = not applicable.
struct AdjustmentCheck {
  std::optional<bool> case_i;
  std::optional<bool> case_ii;
};

/// Throws InvalidArgument when neither case's parameter range applies.
AdjustmentCheck adjustment_step_check(std::uint64_t q, std::uint32_t d1, std::uint32_t k1, std::uint32_t d2,
                                      std::uint32_t k2);

/// 2^{2n/3 - 4} 3^{n/6 + 1} > 2^{2n/3}, compared through sixth powers.
struct PowerComparison {
  Rational lhs_pow6;
  Rational rhs_pow6;
  bool holds = false;
};
PowerComparison theorem2_check(std::uint32_t n);

/// The chain the closed form summarises, evaluated directly:
/// 2^n * (1/4) * worst_case_product(2, n) >= amgm_rhs_bound(n, unbounded).
struct ProofInequality {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};
ProofInequality theorem2_direct_check(std::uint32_t n);

/// Upper bound on how many degree < n polynomials `congruences` normal-form
/// congruences can cover: fill irreducibles by ascending degree with multiplicity
/// k < d, each congruence on a degree-d modulus covering ceil(q^{n-d}) of them.
/// Capped at q^n. `congruences` defaults to n.
BigInt max_coverage_upper(std::uint64_t q, std::uint32_t n, std::optional<std::uint32_t> congruences = std::nullopt);

/// d_n = degree of the n-th irreducible, and whether q^{d_n} > 2qn/(q-1).
struct DegreeGapCheck {
  std::uint32_t nth_degree = 0;
  BigInt lhs;
  Rational rhs;
  bool holds = false;
};
DegreeGapCheck corollary_degree_gap_check(std::uint64_t q, std::uint32_t n);

}  // namespace covsys
