#pragma once

#include <stdexcept>
#include <string>

namespace folkman {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph would exceed the 64-vertex capacity.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (graph6, family expression, predicate, DIMACS).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument violates the documented precondition of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A graph satisfies the hypotheses of the extremal classification but
/// matches none of the permitted shapes. Carries the offending graph.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& what, std::string graph6)
      : Error(what), graph6_(std::move(graph6)) {}

  const std::string& graph6() const noexcept { return graph6_; }

 private:
  std::string graph6_;
};

}  // namespace folkman
