#include "covsys/field.hpp"

#include <algorithm>
#include <utility>

#include "covsys/error.hpp"

namespace covsys {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo the monic polynomial m over F_p.
Coeffs rem_monic(Coeffs a, const Coeffs& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  trim(a);
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible_over_prime(const Coeffs& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  for (std::size_t dd = 1; dd <= d / 2; ++dd) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs g(dd + 1, 0);
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < dd; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[dd] = 1;
      if (rem_monic(f, g, p).empty()) return false;
    }
  }
  return true;
}

Coeffs first_irreducible(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Coeffs f(e + 1, 0);
    std::uint64_t rest = idx;
    for (std::uint32_t i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[e] = 1;
    if (is_irreducible_over_prime(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable: one exists for every degree
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t FieldDesc::q() const noexcept {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  return q;
}

struct Field::Impl {
  FieldDesc desc;
  std::uint32_t q = 0;
  // Extension fields only; prime fields compute directly.
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> mul;
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> inv;
  // Prime fields only.
  std::vector<std::uint32_t> prime_inv;
};

Field::Field() {
  static const Field f2 = Field::prime(2);
  impl_ = f2.impl_;
}

Field Field::prime(std::uint32_t p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw InvalidArgument("field characteristic must be a prime <= " + std::to_string(kMaxPrime) +
                          ", got " + std::to_string(p));
  }
  auto impl = std::make_shared<Impl>();
  impl->desc = FieldDesc{p, 1, {}};
  impl->q = p;
  impl->prime_inv.assign(p, 0);
  for (std::uint32_t a = 1; a < p; ++a) impl->prime_inv[a] = inv_mod(a, p);
  return Field(std::move(impl));
}

Field Field::extension(std::uint32_t p, std::uint32_t e, std::optional<std::vector<std::uint32_t>> ext_modulus) {
  if (e == 0) throw InvalidArgument("extension degree must be positive");
  if (!is_prime(p)) throw InvalidArgument("field characteristic must be prime, got " + std::to_string(p));
  if (e == 1) {
    if (ext_modulus && !ext_modulus->empty()) {
      throw InvalidArgument("prime fields take no extension modulus");
    }
    return prime(p);
  }
  const FieldDesc probe{p, e, {}};
  const std::uint64_t q = probe.q();
  if (q > kMaxExtensionOrder) {
    throw InvalidArgument("extension field order " + std::to_string(q) + " exceeds " +
                          std::to_string(kMaxExtensionOrder));
  }
  Coeffs modulus;
  if (ext_modulus) {
    modulus = *ext_modulus;
    if (modulus.size() != e + 1 || modulus.back() != 1) {
      throw InvalidArgument("extension modulus must be monic of degree " + std::to_string(e));
    }
    for (auto c : modulus) {
      if (c >= p) throw InvalidArgument("extension modulus coefficients must lie in [0, p)");
    }
    if (!is_irreducible_over_prime(modulus, p)) {
      throw InvalidArgument("extension modulus is not irreducible over F_" + std::to_string(p));
    }
  } else {
    modulus = first_irreducible(p, e);
  }

  auto impl = std::make_shared<Impl>();
  impl->desc = FieldDesc{p, e, modulus};
  impl->q = static_cast<std::uint32_t>(q);

  auto to_digits = [&](std::uint32_t v) {
    Coeffs d(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  };
  auto from_digits = [&](const Coeffs& d) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
  };

  const std::uint32_t n = impl->q;
  impl->add.assign(std::size_t{n} * n, 0);
  impl->mul.assign(std::size_t{n} * n, 0);
  impl->neg.assign(n, 0);
  impl->inv.assign(n, 0);
  std::vector<Coeffs> digits(n);
  for (std::uint32_t a = 0; a < n; ++a) digits[a] = to_digits(a);
  for (std::uint32_t a = 0; a < n; ++a) {
    Coeffs na(e);
    for (std::uint32_t i = 0; i < e; ++i) na[i] = (p - digits[a][i]) % p;
    impl->neg[a] = from_digits(na);
    for (std::uint32_t b = 0; b < n; ++b) {
      Coeffs s(e);
      for (std::uint32_t i = 0; i < e; ++i) s[i] = (digits[a][i] + digits[b][i]) % p;
      impl->add[std::size_t{a} * n + b] = from_digits(s);

      Coeffs prod(2 * e - 1, 0);
      for (std::uint32_t i = 0; i < e; ++i) {
        for (std::uint32_t j = 0; j < e; ++j) {
          prod[i + j] = static_cast<std::uint32_t>(
              (prod[i + j] + std::uint64_t{digits[a][i]} * digits[b][j]) % p);
        }
      }
      Coeffs r = rem_monic(prod, modulus, p);
      r.resize(e, 0);
      const std::uint32_t m = from_digits(r);
      impl->mul[std::size_t{a} * n + b] = m;
      if (m == 1) impl->inv[a] = b;
    }
  }
  return Field(std::move(impl));
}

Field Field::of_order(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("field order must be at least 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw InvalidArgument("field order " + std::to_string(q) + " is not a prime power");
  if (p > kMaxPrime) throw InvalidArgument("field characteristic too large");
  return extension(static_cast<std::uint32_t>(p), e);
}

Field Field::from_desc(const FieldDesc& desc) {
  if (desc.e == 1) return prime(desc.p);
  return extension(desc.p, desc.e, desc.ext_modulus);
}

const FieldDesc& Field::desc() const noexcept { return impl_->desc; }
std::uint32_t Field::characteristic() const noexcept { return impl_->desc.p; }
std::uint32_t Field::degree() const noexcept { return impl_->desc.e; }
std::uint32_t Field::order() const noexcept { return impl_->q; }

FieldElem Field::element(std::uint64_t index) const {
  if (index >= impl_->q) {
    throw InvalidArgument("field element index " + std::to_string(index) + " out of range for q = " +
                          std::to_string(impl_->q));
  }
  return FieldElem{static_cast<std::uint32_t>(index)};
}

FieldElem Field::from_integer(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(impl_->desc.p);
  auto r = v % p;
  if (r < 0) r += p;
  return FieldElem{static_cast<std::uint32_t>(r)};
}

FieldElem Field::add(FieldElem a, FieldElem b) const noexcept {
  if (impl_->desc.e == 1) {
    const std::uint32_t s = a.value + b.value;
    return FieldElem{s >= impl_->q ? s - impl_->q : s};
  }
  return FieldElem{impl_->add[std::size_t{a.value} * impl_->q + b.value]};
}

FieldElem Field::neg(FieldElem a) const noexcept {
  if (impl_->desc.e == 1) return FieldElem{a.value == 0 ? 0 : impl_->q - a.value};
  return FieldElem{impl_->neg[a.value]};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem Field::mul(FieldElem a, FieldElem b) const noexcept {
  if (impl_->desc.e == 1) {
    return FieldElem{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % impl_->q)};
  }
  return FieldElem{impl_->mul[std::size_t{a.value} * impl_->q + b.value]};
}

FieldElem Field::inv(FieldElem a) const {
  if (a.value == 0) throw InvalidArgument("zero has no multiplicative inverse");
  if (impl_->desc.e == 1) return FieldElem{impl_->prime_inv[a.value]};
  return FieldElem{impl_->inv[a.value]};
}

std::vector<std::uint32_t> Field::digits(FieldElem a) const {
  std::vector<std::uint32_t> d(impl_->desc.e, 0);
  std::uint32_t v = a.value;
  for (auto& c : d) {
    c = v % impl_->desc.p;
    v /= impl_->desc.p;
  }
  return d;
}

FieldElem Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != impl_->desc.e) {
    throw InvalidArgument("expected " + std::to_string(impl_->desc.e) + " coordinates");
  }
  std::uint32_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= impl_->desc.p) throw InvalidArgument("coordinate out of range");
    v = v * impl_->desc.p + digits[i];
  }
  return FieldElem{v};
}

std::string Field::to_string() const {
  if (impl_->desc.e == 1) return "F_" + std::to_string(impl_->desc.p);
  std::string s = "F_" + std::to_string(impl_->q) + " = F_" + std::to_string(impl_->desc.p) + "[y]/(";
  bool first = true;
  const auto& m = impl_->desc.ext_modulus;
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!first) s += "+";
    first = false;
    if (i == 0 || m[i] != 1) s += std::to_string(m[i]);
    if (i > 0 && m[i] != 1) s += "*";
    if (i >= 1) s += "y";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s + ")";
}

bool operator==(const Field& a, const Field& b) noexcept {
  return a.impl_ == b.impl_ || a.impl_->desc == b.impl_->desc;
}

}  // namespace covsys
