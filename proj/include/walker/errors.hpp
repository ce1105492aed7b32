#pragma once

#include <stdexcept>
#include <string>

namespace walker {

/// Malformed input: unparsable polynomial, bad JSON field, wrong arity.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is well-formed but violates a mathematical precondition
/// (non-closed phi, Bianchi failure, non-orthogonal basis, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric integration did not converge to the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace walker
