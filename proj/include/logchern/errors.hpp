#pragma once

#include <stdexcept>
#include <string>

namespace logchern {

// Malformed or inconsistent user input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A theorem's hypotheses fail (or cannot be certified) for the given input.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace logchern
