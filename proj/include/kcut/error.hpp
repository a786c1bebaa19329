#pragma once

#include <stdexcept>
#include <string>

namespace kcut {

// Malformed graphs, violated preconditions, bad flags.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The exact oracle refuses instances it cannot enumerate.
class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kcut
