#pragma once

#include <stdexcept>

namespace permcode {

// Arguments violate the preconditions of an operation.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input text that cannot be read as the expected structure.
class InputError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// An invariant that the parameters should guarantee did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace permcode
