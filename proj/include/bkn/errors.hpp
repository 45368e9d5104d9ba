#pragma once

#include <stdexcept>
#include <string>

namespace bkn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrecisionMismatch : public Error {
 public:
  using Error::Error;
};

class NonUnit : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class InvalidRim : public Error {
 public:
  using Error::Error;
};

class InvalidTuple : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A criterion was asked about a module it does not apply to.
class NotIndecomposable : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised when a self-check fails. Never expected; indicates a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace bkn
