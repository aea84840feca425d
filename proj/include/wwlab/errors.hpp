#pragma once

#include <stdexcept>
#include <string>

namespace wwlab {

/// Base class of every library error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed parameters or incompatible operands.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A product or datum would populate frequencies outside the lattice band.
class SupportOverflow : public Error {
 public:
  using Error::Error;
};

/// A multiplier is singular at a populated lattice point.
class UndefinedSymbol : public Error {
 public:
  using Error::Error;
};

/// Quadrature refinement disagreed beyond tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace wwlab
