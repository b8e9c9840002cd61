#pragma once

#include <stdexcept>
#include <string>

namespace menuopt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON, CSV, model responses).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented preconditions.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// No selection satisfies the constraints.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// The heuristic could not construct a feasible selection. Feasibility is
/// not disproven.
class InfeasibilityUnprovenError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// Transport or protocol failure while talking to a model endpoint.
class LlmError : public Error {
 public:
  using Error::Error;
};

/// Statistical routine called on a sample it cannot handle.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

}  // namespace menuopt
