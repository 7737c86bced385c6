#pragma once

#include <stdexcept>
#include <string>

namespace binconv {

// Base for every error the library raises. Callers that only care about
// "the computation failed" catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Exact division requested on a non-divisible pair.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

// Denominator vanishes at 0, so there is no power-series expansion there.
class NotAPowerSeries : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ReconstructionFailed : public Error {
 public:
  using Error::Error;
};

class DecompositionUnavailable : public Error {
 public:
  using Error::Error;
};

class CoprimalityViolation : public Error {
 public:
  using Error::Error;
};

// A check that can only fail if the library itself is wrong.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace binconv
