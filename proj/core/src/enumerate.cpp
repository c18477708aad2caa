#include "covsys/enumerate.hpp"

#include <limits>

#include "covsys/error.hpp"

namespace covsys {

std::uint64_t checked_power(std::uint64_t q, std::size_t k) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / q) {
      throw InvalidArgument(std::to_string(q) + "^" + std::to_string(k) + " exceeds 64 bits");
    }
    v *= q;
  }
  return v;
}

PolyIndexRange enumerate_degree_below(const Field& field, std::size_t n) {
  if (n == 0) throw InvalidArgument("enumerate_degree_below requires n >= 1");
  return PolyIndexRange(field, 0, checked_power(field.order(), n));
}

PolyIndexRange monic_of_degree(const Field& field, std::size_t d) {
  const std::uint64_t base = checked_power(field.order(), d);
  if (base > std::numeric_limits<std::uint64_t>::max() / 2) throw InvalidArgument("degree too large to enumerate");
  return PolyIndexRange(field, base, 2 * base);
}

}  // namespace covsys
