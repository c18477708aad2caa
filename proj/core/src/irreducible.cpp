#include "covsys/irreducible.hpp"

#include <algorithm>

#include "covsys/enumerate.hpp"
#include "covsys/error.hpp"

namespace covsys {

Poly Factorization::recompose(const Field& field) const {
  Poly out = Poly::constant(field, unit);
  for (const auto& pp : factors) out *= pp.value();
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.is_constant()) throw InvalidArgument("irreducibility is defined for nonconstant polynomials only");
  const std::size_t d = f.degree();
  for (std::size_t dd = 1; dd <= d / 2; ++dd) {
    for (const Poly& g : monic_of_degree(f.field(), dd)) {
      if (divides(g, f)) return false;
    }
  }
  return true;
}

Factorization factor(const Poly& f) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  const Field& field = f.field();
  Factorization out{{}, f.leading()};
  Poly rest = f.monic();
  for (std::size_t dd = 1; 2 * dd <= rest.degree(); ++dd) {
    for (const Poly& g : monic_of_degree(field, dd)) {
      if (2 * dd > rest.degree()) break;
      std::uint32_t exponent = 0;
      while (true) {
        auto [quot, rem] = divmod(rest, g);
        if (!rem.is_zero()) break;
        rest = std::move(quot);
        ++exponent;
      }
      if (exponent > 0) out.factors.push_back({g, exponent});
    }
  }
  if (rest.degree() >= 1) out.factors.push_back({rest, 1});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

int mobius(std::uint64_t n) noexcept {
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

BigInt count_irreducible(std::uint64_t q, std::size_t d) {
  if (d == 0) throw InvalidArgument("count_irreducible requires d >= 1");
  if (q < 2) throw InvalidArgument("field order must be at least 2");
  BigInt sum = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    if (d % k != 0) continue;
    const int mu = mobius(k);
    if (mu == 0) continue;
    const BigInt term = ipow(BigInt(q), d / k);
    if (mu > 0) sum += term; else sum -= term;
  }
  if (sum % d != 0) throw PostconditionFailed("Mobius sum not divisible by d");
  return sum / d;
}

BigInt cumulative_irreducible_count(std::uint64_t q, std::size_t d, std::size_t from_degree) {
  BigInt total = 0;
  for (std::size_t j = std::max<std::size_t>(from_degree, 1); j <= d; ++j) total += count_irreducible(q, j);
  return total;
}

std::size_t nth_irreducible_degree(std::uint64_t q, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("irreducibles are counted from 1");
  BigInt seen = 0;
  for (std::size_t d = 1;; ++d) {
    seen += count_irreducible(q, d);
    if (seen >= n) return d;
  }
}

std::vector<Poly> irreducibles_up_to(const Field& field, std::size_t d) {
  if (d == 0) throw InvalidArgument("irreducibles_up_to requires d >= 1");
  std::vector<Poly> found;
  for (std::size_t deg = 1; deg <= d; ++deg) {
    for (const Poly& f : monic_of_degree(field, deg)) {
      bool irreducible = true;
      for (const Poly& g : found) {
        if (2 * g.degree() > deg) break;
        if (divides(g, f)) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) found.push_back(f);
    }
  }
  return found;
}

}  // namespace covsys
