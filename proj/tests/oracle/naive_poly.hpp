#pragma once

// Deliberately small polynomial arithmetic over F_p used as an oracle in tests.
// Shares no code with the library: plain int vectors, schoolbook algorithms,
// irreducibility from a sieve of products rather than trial division.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "covsys/poly.hpp"

namespace oracle {

using Vec = std::vector<int>;  // index i = coefficient of x^i, trimmed

inline void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int mod_p(long long v, int p) {
  v %= p;
  return static_cast<int>(v < 0 ? v + p : v);
}

inline int inv_p(int a, int p) {
  for (int b = 1; b < p; ++b) {
    if (a * b % p == 1) return b;
  }
  return 0;
}

inline Vec from_index(std::uint64_t idx, int p) {
  Vec a;
  while (idx) {
    a.push_back(static_cast<int>(idx % p));
    idx /= p;
  }
  return a;
}

inline std::uint64_t to_index(const Vec& a, int p) {
  std::uint64_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

inline Vec add(const Vec& a, const Vec& b, int p) {
  Vec c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = mod_p(c[i] + b[i], p);
  trim(c);
  return c;
}

inline Vec sub(const Vec& a, const Vec& b, int p) {
  Vec c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = mod_p(c[i] - b[i], p);
  trim(c);
  return c;
}

inline Vec mul(const Vec& a, const Vec& b, int p) {
  if (a.empty() || b.empty()) return {};
  Vec c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = mod_p(c[i + j] + a[i] * b[j], p);
  }
  trim(c);
  return c;
}

// b must be nonzero.
inline std::pair<Vec, Vec> divmod(Vec a, const Vec& b, int p) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Vec q(a.size() - b.size() + 1, 0);
  const int lead_inv = inv_p(b.back(), p);
  for (std::size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
    const int c = mod_p(static_cast<long long>(a[shift + b.size() - 1]) * lead_inv, p);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod_p(a[shift + j] - c * b[j], p);
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Vec rem(const Vec& a, const Vec& b, int p) { return divmod(a, b, p).second; }

// Indices of the monic irreducibles of degree exactly d: every monic of degree d
// that is not a product of two monic polynomials of positive degree.
inline std::set<std::uint64_t> irreducible_indices(int p, int d) {
  std::set<std::uint64_t> reducible;
  std::uint64_t pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  for (int a = 1; a <= d / 2; ++a) {
    std::uint64_t pa = 1, pb = 1;
    for (int i = 0; i < a; ++i) pa *= p;
    for (int i = 0; i < d - a; ++i) pb *= p;
    for (std::uint64_t i = pa; i < 2 * pa; ++i) {
      for (std::uint64_t j = pb; j < 2 * pb; ++j) reducible.insert(to_index(mul(from_index(i, p), from_index(j, p), p), p));
    }
  }
  std::set<std::uint64_t> out;
  for (std::uint64_t i = pd; i < 2 * pd; ++i) {
    if (!reducible.count(i)) out.insert(i);
  }
  return out;
}

inline Vec of(const covsys::Poly& f) {
  Vec a;
  for (auto c : f.coefficients()) a.push_back(static_cast<int>(c.value));
  return a;
}

struct Cong {
  Vec modulus;
  Vec residue;
};

inline bool covered(const std::vector<Cong>& system, const Vec& g, int p) {
  for (const auto& c : system) {
    if (rem(sub(g, c.residue, p), c.modulus, p).empty()) return true;
  }
  return false;
}

// Number of polynomials of degree < n not covered by the system.
inline std::uint64_t uncovered_below(const std::vector<Cong>& system, int n, int p) {
  std::uint64_t total = 1, count = 0;
  for (int i = 0; i < n; ++i) total *= p;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (!covered(system, from_index(i, p), p)) ++count;
  }
  return count;
}

}  // namespace oracle
