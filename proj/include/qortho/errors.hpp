#pragma once

#include <stdexcept>
#include <string>

namespace qortho {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by a caller-supplied argument.
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// A denominator vanished. `index()` is the series term or recurrence index at
/// which it happened.
class SingularityError : public Error {
public:
  SingularityError(const std::string& what, int index)
      : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
  int index() const noexcept { return index_; }

private:
  int index_;
};

/// Coincident lattice strands (c = a, Delta = 1) or a vanishing weight denominator.
class DegenerateError : public Error {
public:
  using Error::Error;
};

/// The q-difference operator is singular at the requested point.
class EvaluationPointError : public Error {
public:
  using Error::Error;
};

/// An extrapolation did not settle.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

} // namespace qortho
