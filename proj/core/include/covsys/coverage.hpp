#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "covsys/congruence.hpp"
#include "covsys/poly.hpp"
#include "covsys/rational.hpp"

namespace covsys {

inline constexpr std::uint64_t kDefaultClassCap = std::uint64_t{1} << 24;
inline constexpr std::size_t kDefaultWitnessCap = 16;

/// Definition of coverage: some congruence of the system contains g.
bool covers_point(const CongruenceSystem& system, const Poly& g);

struct CoverageReport {
  std::uint64_t checked_count = 0;
  std::uint64_t covered_count = 0;
  std::vector<Poly> uncovered;  // first witnesses in enumeration order, capped
  bool complete = false;

  std::uint64_t uncovered_count() const noexcept { return checked_count - covered_count; }
};

/// Checks all q^n polynomials of degree < n. Throws CapExceeded past `enumeration_cap`.
CoverageReport coverage_below(const CongruenceSystem& system, std::size_t n,
                              std::size_t witness_cap = kDefaultWitnessCap,
                              std::uint64_t enumeration_cap = kDefaultClassCap);

struct ResidueClass {
  Poly residue;
  Poly modulus;

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

struct ExactCoverage {
  bool complete = false;
  /// An uncovered class mod the lcm; its residue is the minimum-index uncovered polynomial.
  std::optional<ResidueClass> witness_class;
  Poly modulus_lcm;
  std::uint64_t classes_checked = 0;
};

/// Decides whether the system covers all of F_q[x]. Membership in every coset
/// depends only on the class modulo L = lcm(moduli), so the q^{deg L} classes
/// are checked. Throws CapExceeded when q^{deg L} > cap.
ExactCoverage covers_everything_exact(const CongruenceSystem& system, const BigInt& cap = kDefaultClassCap);

/// Residues (deg < deg L) of every uncovered class modulo L, in index order, up to `limit`.
std::vector<Poly> uncovered_classes(const CongruenceSystem& system, const BigInt& cap = kDefaultClassCap,
                                    std::size_t limit = SIZE_MAX);

/// A union of residue classes modulo one polynomial.
struct ClassSet {
  Poly modulus;
  std::vector<Poly> residues;
};

/// Number of classes modulo a.modulus * b.modulus lying in both sets; k * k' for
/// coprime moduli. Duplicate residues are counted once. Throws NotCoprime.
BigInt intersection_count(const ClassSet& a, const ClassSet& b);

/// Sum over congruences of q^{-deg modulus}. Below 1 the system cannot cover everything.
Rational density_upper(const CongruenceSystem& system);

}  // namespace covsys
