#pragma once

#include <stdexcept>
#include <string>

namespace peri {

/// Malformed or out-of-contract input (bad file, bad parameters, bad presentation).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Field arithmetic failure, e.g. inverting zero.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal cross-check failed. Always a bug, never user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace peri
