#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "covsys/field.hpp"
#include "covsys/poly.hpp"

namespace covsys {

/// The coset residue + (modulus). The modulus is stored monic (units do not
/// change the ideal) and the residue fully reduced.
class Congruence {
 public:
  /// Throws InvalidArgument for a constant modulus, FieldMismatch across fields.
  Congruence(const Poly& modulus, const Poly& residue);

  const Poly& modulus() const noexcept { return modulus_; }
  const Poly& residue() const noexcept { return residue_; }
  const Field& field() const noexcept { return modulus_.field(); }

  /// modulus | (g - residue).
  bool contains(const Poly& g) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  Poly modulus_;
  Poly residue_;
};

/// An ordered list of congruences over one field; repeats are kept.
class CongruenceSystem {
 public:
  explicit CongruenceSystem(Field field = Field()) : field_(std::move(field)) {}
  CongruenceSystem(Field field, std::vector<Congruence> congruences);

  void add(Congruence c);

  const Field& field() const noexcept { return field_; }
  std::span<const Congruence> congruences() const noexcept { return congruences_; }
  std::size_t size() const noexcept { return congruences_.size(); }
  bool empty() const noexcept { return congruences_.empty(); }
  const Congruence& operator[](std::size_t i) const { return congruences_.at(i); }
  auto begin() const noexcept { return congruences_.begin(); }
  auto end() const noexcept { return congruences_.end(); }

  /// Monic lcm of all moduli; the constant 1 for an empty system.
  Poly modulus_lcm() const;

  friend bool operator==(const CongruenceSystem&, const CongruenceSystem&) = default;

 private:
  Field field_;
  std::vector<Congruence> congruences_;
};

}  // namespace covsys
