#include "covsys/bounds.hpp"

#include <algorithm>

#include "covsys/error.hpp"
#include "covsys/irreducible.hpp"

namespace covsys {

void validate(const BoundInstance& inst) {
  if (inst.q < 2) throw InvalidArgument("field order must be at least 2");
  if (inst.groups.empty()) throw InvalidArgument("bound instance needs at least one group");
  if (inst.split < 1 || inst.split > inst.groups.size()) {
    throw InvalidArgument("split index must satisfy 1 <= s <= t");
  }
  for (std::size_t i = 0; i < inst.groups.size(); ++i) {
    const auto& g = inst.groups[i];
    if (g.degree < 1) throw InvalidArgument("group degrees must be positive");
    if (i > 0 && inst.groups[i - 1].degree > g.degree) throw InvalidArgument("groups must be sorted by degree");
    if (g.classes < 0 || g.classes >= ipow(BigInt(inst.q), g.degree)) {
      throw InvalidArgument("class counts must satisfy 0 <= k < q^d");
    }
  }
}

Rational lemma_ie_bound(const BoundInstance& inst) {
  validate(inst);
  const BigInt q = inst.q;
  Rational density_sum = 1;
  BigInt count_sum = 1;
  for (std::size_t i = 0; i < inst.split; ++i) {
    density_sum -= Rational(inst.groups[i].classes, ipow(q, inst.groups[i].degree));
    count_sum += inst.groups[i].classes;
  }
  Rational density_prod = density_sum;
  BigInt count_prod = count_sum;
  for (std::size_t i = inst.split; i < inst.groups.size(); ++i) {
    density_prod *= 1 - Rational(inst.groups[i].classes, ipow(q, inst.groups[i].degree));
    count_prod *= 1 + inst.groups[i].classes;
  }
  return 1 + Rational(ipow(q, inst.n)) * density_prod - Rational(count_prod);
}

CountBound lemma3_bound_check(std::uint64_t q, std::uint32_t d, bool from_degree_two) {
  if (d < 2) throw InvalidArgument("lemma3_bound_check requires d >= 2");
  CountBound out;
  out.lhs = cumulative_irreducible_count(q, d, from_degree_two ? 2 : 1);
  if (q == 2) {
    out.rhs = Rational(3) * rpow(Rational(2), static_cast<std::int64_t>(d) - 3);
  } else {
    out.rhs = Rational(BigInt(q - 1), BigInt(2 * q)) * Rational(ipow(BigInt(q), d));
  }
  out.holds = Rational(out.lhs) <= out.rhs;
  return out;
}

std::uint32_t proof_split(std::uint32_t n) noexcept {
  // ceil((n - 3) / 3), clamped at 0 for n <= 3.
  return n <= 3 ? 0 : (n - 3 + 2) / 3;
}

AmGmBound amgm_rhs_bound(std::uint32_t n, std::uint64_t t) {
  if (n < 1 || t < 1) throw InvalidArgument("amgm_rhs_bound requires n >= 1 and t >= 1");
  const std::uint64_t s = std::min<std::uint64_t>(proof_split(n), t - 1);
  AmGmBound out;
  out.split = static_cast<std::uint32_t>(s);
  out.value = rpow(Rational(BigInt(n + s + 1), BigInt(s + 1)), static_cast<std::int64_t>(s + 1));
  return out;
}

Rational worst_case_product(std::uint64_t q, std::uint32_t n) {
  if (n < 1) throw InvalidArgument("worst_case_product requires n >= 1");
  const std::uint32_t s = proof_split(n);
  Rational product = 1;
  std::uint32_t used = 0;
  for (std::uint32_t d = 2; used < s; ++d) {
    const BigInt available = count_irreducible(q, d);
    const Rational factor = 1 - Rational(BigInt(d - 1), ipow(BigInt(q), d));
    for (BigInt i = 0; i < available && used < s; ++i, ++used) product *= factor;
  }
  return product;
}

AdjustmentCheck adjustment_step_check(std::uint64_t q, std::uint32_t d1, std::uint32_t k1, std::uint32_t d2,
                                      std::uint32_t k2) {
  const Rational a = ipow(BigInt(q), d1);
  const Rational b = ipow(BigInt(q), d2);
  auto value = [&](std::int64_t x1, std::int64_t x2) { return (1 - Rational(x1) / a) * (1 - Rational(x2) / b); };

  AdjustmentCheck out;
  if (d1 == d2 && k1 >= 1 && k1 <= k2 && k2 + 1 < d2) {
    out.case_i = value(k1, k2) > value(std::int64_t{k1} - 1, std::int64_t{k2} + 1);
  }
  if (d1 < d2 && k1 + 1 < d1 && k2 <= d2) {
    out.case_ii = value(k1, k2) > value(std::int64_t{k1} + 1, std::int64_t{k2} - 1);
  }
  if (!out.case_i && !out.case_ii) {
    throw InvalidArgument("parameters meet neither adjustment case's preconditions");
  }
  return out;
}

PowerComparison theorem2_check(std::uint32_t n) {
  if (n < 1) throw InvalidArgument("theorem2_check requires n >= 1");
  PowerComparison out;
  out.lhs_pow6 = rpow(Rational(2), 4 * static_cast<std::int64_t>(n) - 24) * Rational(ipow(BigInt(3), n + 6));
  out.rhs_pow6 = Rational(ipow(BigInt(2), 4 * std::uint64_t{n}));
  out.holds = out.lhs_pow6 > out.rhs_pow6;
  return out;
}

ProofInequality theorem2_direct_check(std::uint32_t n) {
  ProofInequality out;
  out.lhs = Rational(ipow(BigInt(2), n)) * Rational(1, 4) * worst_case_product(2, n);
  out.rhs = amgm_rhs_bound(n, std::uint64_t{n} + 1).value;
  out.holds = out.lhs >= out.rhs;
  return out;
}

BigInt max_coverage_upper(std::uint64_t q, std::uint32_t n, std::optional<std::uint32_t> congruences) {
  if (n < 1) throw InvalidArgument("max_coverage_upper requires n >= 1");
  const std::uint32_t budget = congruences.value_or(n);
  const BigInt bq = q;
  const BigInt everything = ipow(bq, n);
  BigInt total = 0;
  std::uint32_t used = 0;
  // Degree-1 moduli admit no congruences (k < 1).
  for (std::uint32_t d = 2; used < budget; ++d) {
    const BigInt per_congruence = d <= n ? ipow(bq, n - d) : BigInt(1);
    const BigInt primes = count_irreducible(q, d);
    for (BigInt i = 0; i < primes && used < budget; ++i) {
      const std::uint32_t k = std::min(d - 1, budget - used);
      total += per_congruence * k;
      used += k;
    }
    if (total >= everything) break;
  }
  return std::min(total, everything);
}

DegreeGapCheck corollary_degree_gap_check(std::uint64_t q, std::uint32_t n) {
  if (q < 2 || n < 1) throw InvalidArgument("corollary_degree_gap_check requires q >= 2 and n >= 1");
  DegreeGapCheck out;
  out.nth_degree = static_cast<std::uint32_t>(nth_irreducible_degree(q, n));
  out.lhs = ipow(BigInt(q), out.nth_degree);
  out.rhs = Rational(BigInt(2 * q * n), BigInt(q - 1));
  out.holds = Rational(out.lhs) > out.rhs;
  return out;
}

}  // namespace covsys
