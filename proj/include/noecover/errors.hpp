#pragma once

#include <stdexcept>
#include <string>

namespace noecover {

// Bad user input: malformed files, labels, literals, violated preconditions.
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search would exceed the configured enumeration budget.
class LimitError : public InputError {
public:
  using InputError::InputError;
};

} // namespace noecover
