#include "covsys/rational.hpp"

#include "covsys/error.hpp"

namespace covsys {

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1, b = base;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) result *= b;
    if (exp > 1) b *= b;
  }
  return result;
}

Rational rpow(const Rational& base, std::int64_t exp) {
  if (exp >= 0) {
    return Rational(ipow(boost::multiprecision::numerator(base), static_cast<std::uint64_t>(exp)),
                    ipow(boost::multiprecision::denominator(base), static_cast<std::uint64_t>(exp)));
  }
  if (base == 0) throw InvalidArgument("zero raised to a negative power");
  return 1 / rpow(base, -exp);
}

std::string to_string(const Rational& r) {
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace covsys
