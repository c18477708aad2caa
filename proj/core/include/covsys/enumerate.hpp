#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>

#include "covsys/field.hpp"
#include "covsys/poly.hpp"

namespace covsys {

/// q^k, throwing InvalidArgument when it does not fit in 64 bits.
std::uint64_t checked_power(std::uint64_t q, std::size_t k);

/// A contiguous run of enumeration indices viewed as polynomials.
class PolyIndexRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Poly;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const Field* field, std::uint64_t index) : field_(field), index_(index) {}

    Poly operator*() const { return Poly::from_index(*field_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++index_;
      return copy;
    }
    std::uint64_t index() const noexcept { return index_; }
    friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.index_ == b.index_; }

   private:
    const Field* field_ = nullptr;
    std::uint64_t index_ = 0;
  };

  PolyIndexRange(Field field, std::uint64_t first, std::uint64_t last)
      : field_(std::move(field)), first_(first), last_(last) {}

  iterator begin() const { return {&field_, first_}; }
  iterator end() const { return {&field_, last_}; }
  std::uint64_t size() const noexcept { return last_ - first_; }

 private:
  Field field_;
  std::uint64_t first_;
  std::uint64_t last_;
};

/// Every polynomial of degree < n (q^n of them, zero included) in base-q index order.
/// Throws InvalidArgument for n = 0.
PolyIndexRange enumerate_degree_below(const Field& field, std::size_t n);

/// Monic polynomials of degree exactly d, in index order (indices q^d .. 2q^d - 1).
PolyIndexRange monic_of_degree(const Field& field, std::size_t d);

}  // namespace covsys
