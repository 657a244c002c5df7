#pragma once

#include <stdexcept>
#include <string>

namespace normgeo {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs outside an operation's domain: zero vectors where α/β are
// evaluated, mismatched dimensions, a missing t or γ.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A norm description that does not define a norm (p < 1, nonpositive
// weights, a Gram matrix that is not SPD).
class InvalidNormError : public Error {
 public:
  using Error::Error;
};

// Malformed norm-spec text.
class SpecParseError : public Error {
 public:
  using Error::Error;
};

// Finite-difference refinement hit the step floor without settling.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace normgeo
