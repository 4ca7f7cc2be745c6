#pragma once

#include <stdexcept>
#include <string>

namespace cuspval {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was not met.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two integers that must be coprime share a factor.
class NotCoprime : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A pair of Laurent monomials whose exponent matrix does not have determinant +-1.
class NonUnimodular : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Raised where the value of the zero element (infinity) would be needed.
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// A continued-fraction stream could not be separated from a rational within the
/// iteration budget. The stream may equal the rational, or be adversarially close.
class IndecisiveComparison : public Error {
 public:
  using Error::Error;
};

/// A finite continued fraction ran out of digits.
class OutOfDigits : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Never expected; signals a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cuspval
