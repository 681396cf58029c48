#pragma once

#include <stdexcept>
#include <string>

namespace primel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or mismatched caller input (shapes, unknown variables, bad JSON).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Zero or constant polynomial where a nonconstant one is required.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class InvalidCoefficientError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition that the caller is responsible for was violated.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class NoPrimitiveElementError : public Error {
 public:
  using Error::Error;
};

class SearchExhaustedError : public Error {
 public:
  using Error::Error;
};

class HypothesisNotMetError : public Error {
 public:
  using Error::Error;
};

/// Raised when a self-check fails. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace primel
