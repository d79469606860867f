#pragma once

#include <stdexcept>
#include <string>

namespace gring {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed tables: dangling indices, wrong shapes, missing entries.
/// Distinct from an axiom failure, which is reported as a value.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Operands that live over different fields.
class SpecMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold (e.g. not strongly graded).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gring
