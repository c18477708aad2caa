#include "covsys/coverage.hpp"

#include <algorithm>
#include <set>

#include "covsys/enumerate.hpp"
#include "covsys/error.hpp"
#include "sieve.hpp"

namespace covsys {

namespace {

std::vector<bool> sieve_below(const CongruenceSystem& system, std::size_t bound, std::uint64_t total) {
  std::vector<bool> covered(total, false);
  for (const auto& c : system) {
    detail::for_each_member_below(c.modulus(), c.residue(), bound, [&](std::uint64_t idx) { covered[idx] = true; });
  }
  return covered;
}

std::uint64_t class_count(const Field& field, std::size_t degree, const BigInt& cap, const char* what) {
  const BigInt required = ipow(BigInt(field.order()), degree);
  if (required > cap) throw CapExceeded(what, required, cap);
  return static_cast<std::uint64_t>(required);
}

}  // namespace

bool covers_point(const CongruenceSystem& system, const Poly& g) {
  if (!(g.field() == system.field())) throw FieldMismatch();
  return std::any_of(system.begin(), system.end(), [&](const Congruence& c) { return c.contains(g); });
}

CoverageReport coverage_below(const CongruenceSystem& system, std::size_t n, std::size_t witness_cap,
                              std::uint64_t enumeration_cap) {
  if (n == 0) throw InvalidArgument("coverage_below requires n >= 1");
  const std::uint64_t total = class_count(system.field(), n, enumeration_cap, "coverage_below");
  const auto covered = sieve_below(system, n, total);

  CoverageReport report;
  report.checked_count = total;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (covered[idx]) {
      ++report.covered_count;
    } else if (report.uncovered.size() < witness_cap) {
      report.uncovered.push_back(Poly::from_index(system.field(), idx));
    }
  }
  report.complete = report.covered_count == report.checked_count;
  return report;
}

ExactCoverage covers_everything_exact(const CongruenceSystem& system, const BigInt& cap) {
  ExactCoverage out;
  out.modulus_lcm = system.modulus_lcm();
  const std::size_t degree = out.modulus_lcm.is_constant() ? 0 : out.modulus_lcm.degree();
  const std::uint64_t total = class_count(system.field(), degree, cap, "covers_everything_exact");
  const auto covered = sieve_below(system, degree, total);
  out.classes_checked = total;
  const auto first = std::find(covered.begin(), covered.end(), false);
  out.complete = first == covered.end();
  if (!out.complete) {
    const auto idx = static_cast<std::uint64_t>(first - covered.begin());
    out.witness_class = ResidueClass{Poly::from_index(system.field(), idx), out.modulus_lcm};
  }
  return out;
}

std::vector<Poly> uncovered_classes(const CongruenceSystem& system, const BigInt& cap, std::size_t limit) {
  const Poly l = system.modulus_lcm();
  const std::size_t degree = l.is_constant() ? 0 : l.degree();
  const std::uint64_t total = class_count(system.field(), degree, cap, "uncovered_classes");
  const auto covered = sieve_below(system, degree, total);
  std::vector<Poly> out;
  for (std::uint64_t idx = 0; idx < total && out.size() < limit; ++idx) {
    if (!covered[idx]) out.push_back(Poly::from_index(system.field(), idx));
  }
  return out;
}

BigInt intersection_count(const ClassSet& a, const ClassSet& b) {
  if (!(a.modulus.field() == b.modulus.field())) throw FieldMismatch();
  if (a.modulus.is_zero() || b.modulus.is_zero()) throw DivisionByZero();
  if (gcd(a.modulus, b.modulus).degree() != 0) {
    throw NotCoprime("class sets modulo " + a.modulus.to_string() + " and " + b.modulus.to_string() +
                     " are not coprime");
  }
  auto reduce = [](const ClassSet& s) {
    std::set<Poly> out;
    for (const auto& r : s.residues) out.insert(r % s.modulus);
    return out;
  };
  const auto ra = reduce(a);
  const auto rb = reduce(b);
  // Every pair meets in exactly one class modulo the product.
  std::set<Poly> joint;
  for (const auto& x : ra) {
    for (const auto& y : rb) {
      const std::pair<Poly, Poly> pair[] = {{x, a.modulus}, {y, b.modulus}};
      joint.insert(crt_combine(pair));
    }
  }
  return BigInt(joint.size());
}

Rational density_upper(const CongruenceSystem& system) {
  Rational total = 0;
  const BigInt q = system.field().order();
  for (const auto& c : system) total += Rational(1, ipow(q, c.modulus().degree()));
  return total;
}

}  // namespace covsys
