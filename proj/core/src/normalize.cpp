#include "covsys/normalize.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "covsys/enumerate.hpp"
#include "covsys/error.hpp"
#include "covsys/irreducible.hpp"

namespace covsys {

namespace {

// A congruence whose modulus is prime^exponent.
struct Entry {
  Poly prime;
  std::uint32_t exponent = 1;
  Poly residue;

  Poly modulus() const { return pow(prime, exponent); }
};

CongruenceSystem to_system(const Field& field, const std::vector<Entry>& entries) {
  CongruenceSystem out(field);
  for (const auto& e : entries) out.add(Congruence(e.modulus(), e.residue));
  return out;
}

void require_omitted(const std::vector<Entry>& entries, const Field& field, const Poly& witness,
                     const char* stage) {
  if (covers_point(to_system(field, entries), witness)) {
    throw PostconditionFailed(std::string(stage) + ": witness " + witness.to_string() + " became covered");
  }
}

}  // namespace

Lemma1Conditions check_lemma1_conditions(const CongruenceSystem& system, const Poly& witness, std::size_t n) {
  Lemma1Conditions out;
  out.covers_below = true;
  for (const Poly& g : enumerate_degree_below(system.field(), n)) {
    if (!covers_point(system, g)) {
      out.covers_below = false;
      out.failures.push_back("(1) " + g.to_string() + " of degree < " + std::to_string(n) + " is not covered");
      break;
    }
  }
  out.omits_witness = !covers_point(system, witness);
  if (!out.omits_witness) out.failures.push_back("(1) witness " + witness.to_string() + " is covered");

  out.irreducible_moduli = true;
  std::map<Poly, std::size_t> multiplicity;
  for (const auto& c : system) {
    if (!is_irreducible(c.modulus())) {
      out.irreducible_moduli = false;
      out.failures.push_back("(2) modulus " + c.modulus().to_string() + " is reducible");
    }
    ++multiplicity[c.modulus()];
  }

  const auto slack = static_cast<long long>(system.size()) - static_cast<long long>(n);
  out.multiplicity_bound = true;
  out.multiplicity_strict = true;
  for (const auto& [modulus, k] : multiplicity) {
    const auto d = static_cast<long long>(modulus.degree());
    const auto kk = static_cast<long long>(k);
    if (kk >= d) out.multiplicity_strict = false;
    if (kk >= d + slack) {
      out.multiplicity_bound = false;
      out.failures.push_back("(3) modulus " + modulus.to_string() + " used " + std::to_string(k) +
                             " times, bound " + std::to_string(d + slack));
    }
  }
  return out;
}

NormalizedSystem normalize_lemma1(const CongruenceSystem& system, std::size_t n, const BigInt& cap) {
  const Field& field = system.field();
  if (n == 0) throw InvalidArgument("degree bound must be positive");

  const auto below = coverage_below(system, n, 1);
  if (!below.complete) {
    throw PremiseViolated("premise violated: " + below.uncovered.front().to_string() + " of degree < " +
                          std::to_string(n) + " is not covered");
  }
  const auto exact = covers_everything_exact(system, cap);
  if (exact.complete) throw PremiseViolated("premise violated: the system covers every polynomial");

  // Stage 1.
  Poly alpha = exact.witness_class->residue;

  // Stage 2: every modulus becomes a prime power.
  std::vector<Entry> entries;
  entries.reserve(system.size());
  for (const auto& c : system) {
    const Factorization fac = factor(c.modulus());
    std::optional<Entry> chosen;
    for (const auto& pp : fac.factors) {
      const Poly m = pp.value();
      if (!divides(m, alpha - c.residue())) {
        chosen = Entry{pp.prime, pp.exponent, c.residue() % m};
        break;
      }
    }
    if (!chosen) {
      throw PostconditionFailed("stage 2: witness " + alpha.to_string() + " satisfies " + c.residue().to_string() +
                                " mod " + c.modulus().to_string());
    }
    entries.push_back(std::move(*chosen));
  }
  require_omitted(entries, field, alpha, "stage 2");

  // Stage 3: collapse higher prime powers, one prime at a time in (degree, index) order.
  std::set<Poly> squared;
  for (const auto& e : entries) {
    if (e.exponent > 1) squared.insert(e.prime);
  }
  for (const Poly& p : squared) {
    while (true) {
      const Poly alpha0 = alpha % p;
      std::vector<std::size_t> agree, disagree;
      std::set<Poly> used{alpha0};
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const Entry& e = entries[i];
        if (!(e.prime == p)) continue;
        const Poly reduced = e.residue % p;
        if (e.exponent == 1) {
          used.insert(reduced);
        } else if (reduced == alpha0) {
          agree.push_back(i);
        } else {
          disagree.push_back(i);
          used.insert(reduced);
        }
      }
      auto collapse = [&](const std::vector<std::size_t>& which) {
        for (auto i : which) {
          entries[i].residue = entries[i].residue % p;
          entries[i].exponent = 1;
        }
      };

      if (agree.empty()) {
        // Nothing here covers alpha mod p; collapsing keeps alpha omitted.
        collapse(disagree);
        require_omitted(entries, field, alpha, "stage 3");
        break;
      }

      std::optional<Poly> r0;
      for (const Poly& r : enumerate_degree_below(field, p.degree())) {
        if (!used.contains(r)) {
          r0 = r;
          break;
        }
      }

      if (r0) {
        collapse(agree);
        collapse(disagree);
        Poly coprime_lcm = Poly::one(field);
        for (const auto& e : entries) {
          if (!(e.prime == p)) coprime_lcm = lcm(coprime_lcm, e.modulus());
        }
        const std::pair<Poly, Poly> parts[] = {{*r0, p}, {alpha % coprime_lcm, coprime_lcm}};
        alpha = crt_combine(parts);
        require_omitted(entries, field, alpha, "stage 3");
        break;
      }

      // Every residue mod p is spoken for: collapse only the agreeing congruences
      // and look for any remaining omitted class.
      collapse(agree);
      const auto retry = covers_everything_exact(to_system(field, entries), cap);
      if (retry.complete) {
        throw NormalizationBlocked("no omitted polynomial remains after collapsing powers of " + p.to_string() +
                                   "; every residue class mod " + p.to_string() + " is already used");
      }
      alpha = retry.witness_class->residue;
    }
  }

  NormalizedSystem out{to_system(field, entries), alpha, n};
  const auto conditions = check_lemma1_conditions(out.system, out.omitted, n);
  if (!conditions.ok()) {
    std::string msg = "normalized system fails its postconditions:";
    for (const auto& f : conditions.failures) msg += " " + f + ";";
    throw PostconditionFailed(msg);
  }
  if (!coverage_below(out.system, n, 1).complete) throw PostconditionFailed("coverage below n lost");
  return out;
}

}  // namespace covsys
