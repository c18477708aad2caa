#include "covsys/construct.hpp"

#include <optional>

#include "covsys/coverage.hpp"
#include "covsys/enumerate.hpp"
#include "covsys/error.hpp"

namespace covsys {

namespace {

// Over F_2 the classes mod x^m are indexed by the low m bits; the coset
// r + (x^i) occupies every index congruent to index(r) mod 2^i.
void mark_coset(std::vector<std::uint32_t>& hits, std::uint64_t residue_index, std::size_t i, std::size_t m) {
  const std::uint64_t stride = std::uint64_t{1} << i;
  for (std::uint64_t idx = residue_index; idx < (std::uint64_t{1} << m); idx += stride) ++hits[idx];
}

}  // namespace

SharpSystem build_sharp_system(std::size_t n, const Poly& target) {
  const Field& f2 = target.field();
  if (f2.order() != 2) throw InvalidArgument("sharp systems are built over F_2 only");
  if (n == 0) throw InvalidArgument("sharp system size must be positive");
  if (n > 24) throw InvalidArgument("sharp system size above 24 exceeds the exhaustive step search");
  if (target.degree() >= n) throw InvalidArgument("target degree must be below n");

  const Poly x = Poly::x(f2);
  std::vector<Poly> chosen;  // r'_1 .. r'_k
  chosen.push_back((Poly::one(f2) + target) % x);

  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t m = k + 1;
    std::vector<std::uint32_t> hits(std::size_t{1} << m, 0);
    for (std::size_t i = 1; i <= k; ++i) mark_coset(hits, chosen[i - 1].index(), i, m);
    const Poly r_next = target % pow(x, m);
    mark_coset(hits, r_next.index(), m, m);

    // A candidate tiles iff no class is hit twice and its own class is the only one missed.
    std::size_t overlaps = 0, misses = 0;
    std::uint64_t missed = 0;
    for (std::size_t idx = 0; idx < hits.size(); ++idx) {
      if (hits[idx] > 1) ++overlaps;
      if (hits[idx] == 0) {
        ++misses;
        missed = idx;
      }
    }
    std::optional<Poly> found;
    std::size_t passing = 0;
    for (const Poly& candidate : enumerate_degree_below(f2, m)) {
      if (overlaps == 0 && misses == 1 && candidate.index() == missed) {
        ++passing;
        if (!found) found = candidate;
      }
    }
    if (passing != 1) {
      throw UniquenessFailure("step " + std::to_string(m) + ": " + std::to_string(passing) +
                              " residues complete the partition, expected exactly one");
    }
    chosen.push_back(*found);
  }

  SharpSystem out{CongruenceSystem(f2), target, n};
  for (std::size_t i = 1; i <= n; ++i) out.system.add(Congruence(pow(x, i), chosen[i - 1]));

  const auto below = coverage_below(out.system, n, 2);
  if (below.uncovered_count() != 1 || !(below.uncovered.front() == target)) {
    throw PostconditionFailed("sharp system does not miss exactly the target below degree " + std::to_string(n));
  }
  const auto exact = covers_everything_exact(out.system);
  if (exact.complete || !(exact.witness_class->residue == target)) {
    throw PostconditionFailed("sharp system's uncovered class is not the target's");
  }
  return out;
}

SharpReport verify_sharp(const SharpSystem& sharp) {
  SharpReport report;
  const auto& congruences = sharp.system.congruences();
  const std::size_t n = sharp.n;
  const Field& field = sharp.system.field();
  const Poly x = Poly::x(field);

  bool shape_ok = congruences.size() == n && field.order() == 2 && sharp.target.degree() < n;
  for (std::size_t i = 0; shape_ok && i < n; ++i) shape_ok = congruences[i].modulus() == pow(x, i + 1);
  if (!shape_ok) {
    report.failures.push_back("shape: expected n congruences over F_2 with moduli x, ..., x^n");
    return report;
  }

  // (a) r_i + (x^i) and r_j + (x^j), i < j, meet iff r_j = r_i mod x^i.
  report.disjoint = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (congruences[j].residue() % congruences[i].modulus() == congruences[i].residue()) {
        report.disjoint = false;
        report.failures.push_back("disjointness: cosets mod x^" + std::to_string(i + 1) + " and x^" +
                                  std::to_string(j + 1) + " intersect");
      }
    }
  }

  // (b) count the classes mod x^n hit by each coset, target included.
  std::vector<std::uint32_t> hits(std::size_t{1} << n, 0);
  for (const Poly& cls : enumerate_degree_below(field, n)) {
    for (const auto& c : congruences) {
      if (c.contains(cls)) ++hits[cls.index()];
    }
  }
  ++hits[sharp.target.index()];
  report.partition = true;
  for (std::size_t idx = 0; idx < hits.size(); ++idx) {
    if (hits[idx] != 1) {
      report.partition = false;
      report.failures.push_back("partition: class " + Poly::from_index(field, idx).to_string() + " mod x^" +
                                std::to_string(n) + " is hit " + std::to_string(hits[idx]) + " times");
      break;
    }
  }

  // (c) the only uncovered class mod x^n is the target's.
  const auto missing = uncovered_classes(sharp.system);
  report.uncovered_is_target = missing.size() == 1 && missing.front() == sharp.target;
  if (!report.uncovered_is_target) {
    report.failures.push_back("uncovered: expected exactly the class of " + sharp.target.to_string() + ", found " +
                              std::to_string(missing.size()) + " classes");
  }
  return report;
}

}  // namespace covsys
