#include "covsys/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "covsys/error.hpp"

namespace covsys {

Poly::Poly(Field field) : field_(std::move(field)) {}

Poly::Poly(Field field, std::vector<FieldElem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (c.value >= field_.order()) throw InvalidArgument("coefficient out of range for " + field_.to_string());
  }
  canonicalize();
}

Poly::Poly(Field field, std::initializer_list<std::uint32_t> coeffs) : field_(std::move(field)) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(field_.element(c));
  canonicalize();
}

Poly Poly::constant(const Field& field, FieldElem c) { return Poly(field, std::vector<FieldElem>{c}); }

Poly Poly::monomial(const Field& field, std::size_t k, FieldElem c) {
  std::vector<FieldElem> coeffs(k + 1, FieldElem{});
  coeffs[k] = c;
  return Poly(field, std::move(coeffs));
}

Poly Poly::from_index(const Field& field, std::uint64_t index) {
  std::vector<FieldElem> coeffs;
  const std::uint64_t q = field.order();
  while (index != 0) {
    coeffs.push_back(FieldElem{static_cast<std::uint32_t>(index % q)});
    index /= q;
  }
  Poly out(field);
  out.coeffs_ = std::move(coeffs);
  return out;
}

std::uint64_t Poly::index() const {
  const std::uint64_t q = field_.order();
  std::uint64_t idx = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (idx > (std::numeric_limits<std::uint64_t>::max() - coeffs_[i].value) / q) {
      throw InvalidArgument("polynomial index exceeds 64 bits");
    }
    idx = idx * q + coeffs_[i].value;
  }
  return idx;
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_.inv(leading()));
}

void Poly::canonicalize() noexcept {
  while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& other) const {
  if (!(field_ == other.field_)) throw FieldMismatch();
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_field(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], other.coeffs_[i]);
  canonicalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_field(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], other.coeffs_[i]);
  canonicalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_field(b);
  Poly out(a.field_);
  if (a.is_zero() || b.is_zero()) return out;
  const Field& f = a.field_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElem{});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].value == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] = f.add(out.coeffs_[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  out.canonicalize();
  return out;
}

Poly operator-(const Poly& a) {
  Poly out(a.field_);
  out.coeffs_.reserve(a.coeffs_.size());
  for (auto c : a.coeffs_) out.coeffs_.push_back(a.field_.neg(c));
  return out;
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly Poly::scaled(FieldElem c) const {
  Poly out(field_);
  if (c.value == 0) return out;
  out.coeffs_.reserve(coeffs_.size());
  for (auto v : coeffs_) out.coeffs_.push_back(field_.mul(v, c));
  out.canonicalize();
  return out;
}

bool operator==(const Poly& a, const Poly& b) noexcept {
  return a.coeffs_ == b.coeffs_ && a.field_ == b.field_;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  a.require_same_field(b);
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] <=> b.coeffs_[i];
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  auto coeff_text = [&](FieldElem c) {
    if (field_.is_prime_field()) return std::to_string(c.value);
    return "[" + std::to_string(c.value) + "]";
  };
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElem c = coeffs_[i];
    if (c.value == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += coeff_text(c);
      continue;
    }
    if (c.value != 1) s += coeff_text(c) + "*";
    s += "x";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  if (b.is_zero()) throw DivisionByZero();
  const Field& f = a.field();
  if (a.is_zero() || a.degree() < b.degree()) return {Poly(f), a};

  std::vector<FieldElem> rem(a.coefficients().begin(), a.coefficients().end());
  const auto divisor = b.coefficients();
  const std::size_t db = b.degree();
  const FieldElem lead_inv = f.inv(b.leading());
  std::vector<FieldElem> quot(a.degree() - db + 1, FieldElem{});

  for (std::size_t top = rem.size(); top-- > db;) {
    if (rem[top].value == 0) continue;
    const FieldElem factor = f.mul(rem[top], lead_inv);
    const std::size_t shift = top - db;
    quot[shift] = factor;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, divisor[i]));
    }
  }
  rem.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

bool divides(const Poly& b, const Poly& a) { return divmod(a, b).remainder.is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd of two zero polynomials is undefined");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("lcm requires nonzero polynomials");
  return (a / gcd(a, b) * b).monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd of two zero polynomials is undefined");
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(f), s1(f);
  Poly t0(f), t1 = Poly::one(f);
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(rem));
    s0 = std::exchange(s1, s0 - quot * s1);
    t0 = std::exchange(t1, t0 - quot * t1);
  }
  const FieldElem inv = f.inv(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  if (m.is_zero()) throw DivisionByZero();
  const Poly reduced = a % m;
  if (reduced.is_zero()) {
    if (m.is_constant()) return Poly(m.field());
    throw NotCoprime("polynomial is not invertible modulo " + m.to_string());
  }
  auto eg = extended_gcd(reduced, m);
  if (eg.g.degree() != 0) throw NotCoprime(a.to_string() + " is not invertible modulo " + m.to_string());
  return eg.s % m;
}

Poly pow(const Poly& base, std::uint64_t exp) {
  Poly result = Poly::one(base.field());
  Poly b = base;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) result *= b;
    if (exp > 1) b *= b;
  }
  return result;
}

Poly crt_combine(std::span<const std::pair<Poly, Poly>> congruences) {
  if (congruences.empty()) throw InvalidArgument("crt_combine needs at least one congruence");
  const Field& f = congruences.front().second.field();
  for (const auto& [r, m] : congruences) {
    if (!(r.field() == f) || !(m.field() == f)) throw FieldMismatch();
    if (m.is_zero()) throw DivisionByZero();
  }
  for (std::size_t i = 0; i < congruences.size(); ++i) {
    for (std::size_t j = i + 1; j < congruences.size(); ++j) {
      if (gcd(congruences[i].second, congruences[j].second).degree() != 0) {
        throw NotCoprime("moduli " + congruences[i].second.to_string() + " and " +
                         congruences[j].second.to_string() + " are not coprime");
      }
    }
  }
  Poly result = congruences.front().first % congruences.front().second;
  Poly modulus = congruences.front().second;
  for (std::size_t i = 1; i < congruences.size(); ++i) {
    const auto& [r, m] = congruences[i];
    // result + modulus * t = r (mod m)
    const Poly t = ((r - result) * inverse_mod(modulus, m)) % m;
    result = result + modulus * t;
    modulus = modulus * m;
    result = result % modulus;
  }
  return result;
}

namespace {

class PolyParser {
 public:
  PolyParser(const Field& field, std::string_view text, std::size_t line, std::size_t column_offset)
      : field_(field), text_(text), line_(line), offset_(column_offset) {}

  Poly parse() {
    skip_spaces();
    if (at_end()) fail("expected a polynomial");
    Poly total(field_);
    while (true) {
      total += term();
      skip_spaces();
      if (at_end()) break;
      if (peek() != '+') fail(std::string("unexpected character '") + peek() + "'");
      ++pos_;
      skip_spaces();
      if (at_end()) fail("expected a term after '+'");
    }
    return total;
  }

 private:
  Poly term() {
    FieldElem coeff = field_.one();
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = coefficient();
      have_coeff = true;
      skip_spaces();
      if (at_end() || peek() != '*') return Poly::constant(field_, coeff);
      ++pos_;
      skip_spaces();
    }
    if (at_end() || peek() != 'x') fail(have_coeff ? "expected 'x' after '*'" : "expected a coefficient or 'x'");
    ++pos_;
    std::size_t exponent = 1;
    skip_spaces();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_spaces();
      exponent = integer("exponent");
    }
    return Poly::monomial(field_, exponent, coeff);
  }

  FieldElem coefficient() {
    const std::size_t start = pos_;
    const std::uint64_t v = integer("coefficient");
    if (v >= field_.characteristic()) {
      fail_at(start, "coefficient " + std::to_string(v) + " is not in [0, " +
                         std::to_string(field_.characteristic()) + ")");
    }
    return FieldElem{static_cast<std::uint32_t>(v)};
  }

  std::uint64_t integer(const char* what) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > 100'000'000) fail(std::string(what) + " too large");
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_spaces() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(line_, offset_ + pos + 1, msg);
  }

  const Field& field_;
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const Field& field, std::string_view text, std::size_t line, std::size_t column_offset) {
  if (!field.is_prime_field()) {
    throw InvalidArgument("the polynomial text format supports prime fields only");
  }
  return PolyParser(field, text, line, column_offset).parse();
}

}  // namespace covsys
