#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "covsys/congruence.hpp"
#include "covsys/coverage.hpp"
#include "covsys/poly.hpp"

namespace covsys {

/// A counterexample-shaped system: covers every polynomial of degree < degree_bound,
/// misses `omitted`, and every modulus is irreducible.
struct NormalizedSystem {
  CongruenceSystem system;
  Poly omitted;
  std::size_t degree_bound = 0;
};

/// Independent brute-force evaluation of the three normal-form conditions.
///
/// Condition (3) is checked as k < d + (m - n), where m is the number of
/// congruences and n the degree bound: a modulus p of degree d may be used by
/// k congruences only if the remaining m - k could still cover the degree < n - d
/// polynomials of the class alpha mod p. For m = n this is the familiar k < d,
/// which is reported separately as `multiplicity_strict`.
struct Lemma1Conditions {
  bool covers_below = false;         // (1) all deg < n covered, by pointwise checks
  bool omits_witness = false;        // (1) the witness is not covered
  bool irreducible_moduli = false;   // (2)
  bool multiplicity_bound = false;   // (3), k < d + (m - n)
  bool multiplicity_strict = false;  // k < d
  std::vector<std::string> failures;

  bool ok() const noexcept { return covers_below && omits_witness && irreducible_moduli && multiplicity_bound; }
};

Lemma1Conditions check_lemma1_conditions(const CongruenceSystem& system, const Poly& witness, std::size_t n);

/// Rewrites a system that covers every polynomial of degree < n but not all of
/// F_q[x] into one whose moduli are all irreducible, keeping both properties.
///
///  1. The witness alpha is the minimum-index uncovered polynomial.
///  2. A composite modulus f = prod p_j^l_j is replaced by the first prime power
///     (in (degree, index) order) whose congruence alpha fails.
///  3. For each p occurring squared or higher: prime-power congruences whose
///     residue agrees with alpha mod p collapse to (p, alpha mod p); those that
///     disagree collapse to their reduction mod p; the new witness is the CRT
///     lift of an unused residue r0 mod p and alpha mod the lcm of the moduli
///     coprime to p. Without an unused residue only the agreeing congruences are
///     collapsed, a fresh witness is taken from the exact check, and the prime
///     is retried.
///
/// Throws PremiseViolated when the input does not cover degree < n or already
/// covers everything, NormalizationBlocked when step 3 leaves no omitted
/// polynomial, and PostconditionFailed if the result fails check_lemma1_conditions.
NormalizedSystem normalize_lemma1(const CongruenceSystem& system, std::size_t n,
                                  const BigInt& cap = kDefaultClassCap);

}  // namespace covsys
