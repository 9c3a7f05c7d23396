#pragma once

#include <stdexcept>
#include <string>

namespace subfac {

// Malformed or inconsistent user input (bad dimensions, unknown labels, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that is well formed but outside what the workbench can handle.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction that the theory guarantees to succeed did not. Either the
// inputs violated an unchecked precondition or there is a bug.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subfac
