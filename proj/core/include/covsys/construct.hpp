#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "covsys/congruence.hpp"
#include "covsys/poly.hpp"

namespace covsys {

/// n congruences over F_2 with moduli x, x^2, ..., x^n covering every polynomial
/// of degree < n except `target`.
struct SharpSystem {
  CongruenceSystem system;
  Poly target;
  std::size_t n = 0;
};

/// Builds the system inductively: r'_1 = 1 + (target mod x), and r'_{k+1} is the
/// single residue of degree < k+1 for which the cosets r'_i + (x^i), i <= k+1,
/// together with target + (x^{k+1}) partition F_2[x]. Each step searches all
/// 2^{k+1} candidates and throws UniquenessFailure unless exactly one qualifies.
/// Throws InvalidArgument unless the field is F_2, n >= 1 and deg target < n.
SharpSystem build_sharp_system(std::size_t n, const Poly& target);

struct SharpReport {
  bool disjoint = false;         // the cosets r'_i + (x^i) are pairwise disjoint
  bool partition = false;        // with target + (x^n) they tile the classes mod x^n once each
  bool uncovered_is_target = false;
  std::vector<std::string> failures;

  bool ok() const noexcept { return disjoint && partition && uncovered_is_target; }
};

/// Rechecks a sharp system without reusing the builder's bookkeeping.
SharpReport verify_sharp(const SharpSystem& sharp);

}  // namespace covsys
