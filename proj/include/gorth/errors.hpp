#pragma once

#include <stdexcept>
#include <string>

namespace gorth {

// Malformed input: bad dimensions, unparsable text, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// An identity that must hold for every valid input failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The input is valid but lies outside what the classification decides:
// a nonzero-eigenvalue part, or a type summand at least as tall as the
// special height.
class Undecidable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace gorth
