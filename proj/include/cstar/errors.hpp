#pragma once

#include <stdexcept>
#include <string>

namespace cstar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape, rank or block-size mismatch between operands.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A subspace that should be A-invariant is not, or a map is not A-linear.
class InvarianceError : public Error {
 public:
  using Error::Error;
};

/// The caller's input does not satisfy the hypotheses of a check.
/// This is distinct from the check itself failing.
class UnmetHypothesis : public Error {
 public:
  using Error::Error;
};

/// A constructive identity that must hold for every valid input failed.
/// Seeing one of these means the implementation is wrong.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cstar
