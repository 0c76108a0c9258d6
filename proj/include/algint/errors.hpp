#pragma once

#include <stdexcept>
#include <string>

namespace algint {

// Base class for everything this library throws on bad input or broken
// preconditions. Mathematical findings (failed checks, violation lists) are
// returned in report structs instead; exceptions mean the request itself was
// ill-posed.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed scalar / field / file contents.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Arithmetic between scalars of different fields. There is no implicit
// promotion; the caller picked the wrong field somewhere.
struct FieldMismatchError : Error {
  explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

// Shape mismatch: wrong tensor size, non-square matrix, coefficient list of
// the wrong length, elements of different algebras.
struct DimensionError : Error {
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// Constructing an integral functional from a C matrix that fails the
// completeness relation, i.e. the supplied C does not actually conjugate the
// two regular representations.
struct CompletenessError : Error {
  explicit CompletenessError(const std::string& what) : Error(what) {}
};

// Requested an exact exponential of a non-nilpotent matrix. Carries the
// power at which the sequence d^k was seen to repeat instead of dying.
struct NonNilpotentError : Error {
  NonNilpotentError(const std::string& what, int repeat_power)
      : Error(what), repeat_power(repeat_power) {}
  int repeat_power;
};

}  // namespace algint
