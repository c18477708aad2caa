#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "covsys/enumerate.hpp"
#include "covsys/poly.hpp"

namespace covsys::detail {

// Calls fn(index) for every member of residue + (modulus) of degree < bound,
// i.e. residue + h*modulus for all h with deg h < bound - deg modulus.
// Walks h with an odometer so each step costs O(bound).
template <class Fn>
void for_each_member_below(const Poly& modulus, const Poly& residue, std::size_t bound, Fn&& fn) {
  const Field& field = modulus.field();
  const std::size_t dm = modulus.degree();
  if (dm > bound) {
    if (residue.degree() < bound) fn(residue.index());
    return;
  }
  const std::uint32_t q = field.order();
  const std::size_t free = bound - dm;
  std::vector<FieldElem> cur(bound, FieldElem{});
  for (std::size_t i = 0; i < residue.coefficients().size(); ++i) cur[i] = residue.coefficients()[i];
  const auto mod = modulus.coefficients();

  auto index_of = [&] {
    std::uint64_t idx = 0;
    for (std::size_t i = bound; i-- > 0;) idx = idx * q + cur[i].value;
    return idx;
  };
  auto add_shifted = [&](std::size_t shift, FieldElem c) {
    for (std::size_t j = 0; j < mod.size(); ++j) cur[shift + j] = field.add(cur[shift + j], field.mul(c, mod[j]));
  };

  fn(index_of());
  if (free == 0) return;
  std::vector<std::uint32_t> digits(free, 0);
  const std::uint64_t count = checked_power(q, free);
  for (std::uint64_t step = 1; step < count; ++step) {
    std::size_t i = 0;
    while (digits[i] == q - 1) {
      add_shifted(i, field.sub(FieldElem{0}, FieldElem{q - 1}));
      digits[i] = 0;
      ++i;
    }
    add_shifted(i, field.sub(FieldElem{digits[i] + 1}, FieldElem{digits[i]}));
    ++digits[i];
    fn(index_of());
  }
}

}  // namespace covsys::detail
