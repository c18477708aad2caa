#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "covsys/rational.hpp"

namespace covsys {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the caller's cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, BigInt required, BigInt cap)
      : Error(what + ": requires " + required.str() + " items, cap is " + cap.str()),
        required_(std::move(required)),
        cap_(std::move(cap)) {}

  const BigInt& required() const noexcept { return required_; }
  const BigInt& cap() const noexcept { return cap_; }

 private:
  BigInt required_;
  BigInt cap_;
};

/// The input does not satisfy an operation's stated precondition.
class PremiseViolated : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Either a bug, or a genuine
/// counterexample to a proven statement; both must be reported.
class PostconditionFailed : public Error {
 public:
  using Error::Error;
};

/// normalize_lemma1 cannot proceed by replacing moduli with divisors.
class NormalizationBlocked : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search found zero or several candidates where exactly one was expected.
class UniquenessFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace covsys
