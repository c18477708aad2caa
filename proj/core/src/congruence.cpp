#include "covsys/congruence.hpp"

#include "covsys/error.hpp"

namespace covsys {

Congruence::Congruence(const Poly& modulus, const Poly& residue) : modulus_(modulus.monic()) {
  if (!(modulus.field() == residue.field())) throw FieldMismatch();
  if (modulus.is_constant()) {
    throw InvalidArgument("congruence modulus must be nonconstant, got " + modulus.to_string());
  }
  residue_ = residue % modulus_;
}

bool Congruence::contains(const Poly& g) const { return divides(modulus_, g - residue_); }

CongruenceSystem::CongruenceSystem(Field field, std::vector<Congruence> congruences)
    : field_(std::move(field)), congruences_(std::move(congruences)) {
  for (const auto& c : congruences_) {
    if (!(c.field() == field_)) throw FieldMismatch();
  }
}

void CongruenceSystem::add(Congruence c) {
  if (!(c.field() == field_)) throw FieldMismatch();
  congruences_.push_back(std::move(c));
}

Poly CongruenceSystem::modulus_lcm() const {
  Poly l = Poly::one(field_);
  for (const auto& c : congruences_) l = lcm(l, c.modulus());
  return l;
}

}  // namespace covsys
