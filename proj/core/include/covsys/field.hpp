#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace covsys {

/// An element of F_q, stored as its base-p index: value = sum c_i p^i over the
/// polynomial-basis coefficients c_0..c_{e-1}. For prime fields this is the residue.
struct FieldElem {
  std::uint32_t value = 0;

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// Describes F_q with q = p^e. ext_modulus lists the coefficients (constant term
/// first) of a monic irreducible degree-e polynomial over F_p; empty iff e == 1.
struct FieldDesc {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::vector<std::uint32_t> ext_modulus;

  std::uint64_t q() const noexcept;

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

/// Immutable handle to a finite field. Copies share the arithmetic tables.
class Field {
 public:
  static constexpr std::uint32_t kMaxPrime = 65521;
  static constexpr std::uint64_t kMaxExtensionOrder = 1024;

  /// F_p. Throws InvalidArgument unless p is a prime <= kMaxPrime.
  static Field prime(std::uint32_t p);

  /// F_{p^e}. Without an explicit modulus the enumeration-first monic
  /// irreducible of degree e over F_p is used.
  static Field extension(std::uint32_t p, std::uint32_t e,
                         std::optional<std::vector<std::uint32_t>> ext_modulus = std::nullopt);

  /// F_q for a prime power q.
  static Field of_order(std::uint64_t q);

  static Field from_desc(const FieldDesc& desc);

  /// F_2.
  Field();

  const FieldDesc& desc() const noexcept;
  std::uint32_t characteristic() const noexcept;
  std::uint32_t degree() const noexcept;
  std::uint32_t order() const noexcept;
  bool is_prime_field() const noexcept { return degree() == 1; }

  FieldElem zero() const noexcept { return FieldElem{0}; }
  FieldElem one() const noexcept { return FieldElem{1}; }

  /// The element with the given index; throws if index >= q.
  FieldElem element(std::uint64_t index) const;
  /// Image of an integer in the prime subfield.
  FieldElem from_integer(std::int64_t v) const noexcept;

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  /// Throws DivisionByZero-style InvalidArgument for zero.
  FieldElem inv(FieldElem a) const;

  /// The e polynomial-basis coordinates of a over F_p.
  std::vector<std::uint32_t> digits(FieldElem a) const;
  FieldElem from_digits(std::span<const std::uint32_t> digits) const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) noexcept;

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace covsys
