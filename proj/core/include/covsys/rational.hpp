#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace covsys {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// base^exp for a non-negative exponent.
BigInt ipow(const BigInt& base, std::uint64_t exp);

/// base^exp as a rational; negative exponents invert. base must be nonzero when exp < 0.
Rational rpow(const Rational& base, std::int64_t exp);

/// Prints `a` for integers and `a/b` otherwise, never decimals.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

}  // namespace covsys
