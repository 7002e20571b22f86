#pragma once

#include <stdexcept>

namespace scfgrid {

// Input violates a documented precondition (invalid list, point outside G, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured size cap (exhaustive sweep, render width).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural guarantee did not hold. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace scfgrid
