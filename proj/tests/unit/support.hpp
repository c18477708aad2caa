#pragma once

#include <string_view>

#include "covsys/covsys.hpp"

namespace testing {

inline const covsys::Field& f2() {
  static const covsys::Field f = covsys::Field::prime(2);
  return f;
}

inline const covsys::Field& f3() {
  static const covsys::Field f = covsys::Field::prime(3);
  return f;
}

inline covsys::Poly P(const covsys::Field& f, std::string_view text) { return covsys::parse_poly(f, text); }
inline covsys::Poly P2(std::string_view text) { return P(f2(), text); }

inline covsys::CongruenceSystem sys(const covsys::Field& f, std::initializer_list<std::pair<const char*, const char*>> rows) {
  covsys::CongruenceSystem s(f);
  for (const auto& [residue, modulus] : rows) s.add(covsys::Congruence(P(f, modulus), P(f, residue)));
  return s;
}

}  // namespace testing
