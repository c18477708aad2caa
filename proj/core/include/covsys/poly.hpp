#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "covsys/field.hpp"

namespace covsys {

/// A univariate polynomial over F_q in canonical form: coefficient i belongs to
/// x^i and the highest stored coefficient is nonzero. The zero polynomial has
/// no coefficients and, by convention, degree 0.
class Poly {
 public:
  /// The zero polynomial over `field`.
  explicit Poly(Field field = Field());
  Poly(Field field, std::vector<FieldElem> coeffs);
  /// Coefficients given as element indices, constant term first.
  Poly(Field field, std::initializer_list<std::uint32_t> coeffs);

  static Poly constant(const Field& field, FieldElem c);
  static Poly one(const Field& field) { return constant(field, field.one()); }
  /// c * x^k.
  static Poly monomial(const Field& field, std::size_t k, FieldElem c);
  static Poly x(const Field& field) { return monomial(field, 1, field.one()); }
  /// Inverse of index(): the base-q digits of `index` become the coefficients.
  static Poly from_index(const Field& field, std::uint64_t index);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// Degree, with deg(0) = 0.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::span<const FieldElem> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero past the end.
  FieldElem operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : FieldElem{};
  }
  FieldElem leading() const noexcept { return coeffs_.empty() ? FieldElem{} : coeffs_.back(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == field_.one(); }

  /// Base-q little-endian index sum c_i q^i. Throws InvalidArgument on 64-bit overflow.
  std::uint64_t index() const;

  /// Divides by the leading coefficient; zero stays zero.
  Poly monic() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);

  Poly scaled(FieldElem c) const;

  /// Equal fields and equal coefficients.
  friend bool operator==(const Poly& a, const Poly& b) noexcept;
  /// Orders by (degree, enumeration index); for polynomials of equal degree this
  /// compares coefficients from the top down. Throws FieldMismatch.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  /// Text form such as `x^3+x+1` or `2*x^2+1`. Extension-field coefficients are
  /// printed as their element index in brackets, e.g. `[3]*x`.
  std::string to_string() const;

 private:
  void canonicalize() noexcept;
  void require_same_field(const Poly& other) const;

  Field field_;
  std::vector<FieldElem> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// a = quotient * b + remainder with remainder = 0 or deg remainder < deg b.
DivMod divmod(const Poly& a, const Poly& b);

/// True iff b divides a. b must be nonzero.
bool divides(const Poly& b, const Poly& a);

/// Monic greatest common divisor. Throws InvalidArgument when both are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Monic least common multiple of nonzero a, b.
Poly lcm(const Poly& a, const Poly& b);

struct ExtendedGcd {
  Poly g;  // monic gcd
  Poly s;  // s*a + t*b = g
  Poly t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m; throws NotCoprime when gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);

Poly pow(const Poly& base, std::uint64_t exp);

/// The unique g with deg g < deg(prod moduli) and g = residue_i mod modulus_i.
/// Moduli must be nonzero and pairwise coprime; residues are reduced first.
/// Throws NotCoprime or InvalidArgument (empty input).
Poly crt_combine(std::span<const std::pair<Poly, Poly>> congruences);

/// Parses the polynomial text syntax over a prime field: a `+`-separated sum of
/// `c*x^k`, `x^k`, `c*x`, `x` or `c`, with integer coefficients in [0, p).
/// Errors carry 1-based columns offset by `column_offset`.
Poly parse_poly(const Field& field, std::string_view text, std::size_t line = 1,
                std::size_t column_offset = 0);

}  // namespace covsys
