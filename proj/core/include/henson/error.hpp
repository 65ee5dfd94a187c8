#pragma once

#include <stdexcept>
#include <string>

namespace henson {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: a digraph that is not irreflexive/antisymmetric, a
// tournament that is incomplete, an out-of-range vertex, bad JSON.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A caller-supplied or built-in search budget ran out before an answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An operation was invoked outside its documented domain.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// A certificate that the lemma tables promise could not be constructed.
// Never caught inside the library: it means either an edge case of the
// case analysis or a bug, and must surface verbatim.
class WitnessConstructionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace henson
