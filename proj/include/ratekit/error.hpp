#pragma once

#include <stdexcept>
#include <string>

namespace ratekit {

// Parameter outside the documented domain of an operation.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configuration whose implied cluster sizes fall outside [1, n].
class InfeasibleConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative procedure ran out of iterations. `last` carries the final iterate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last)
      : std::runtime_error(what), last_(last) {}
  double last() const noexcept { return last_; }

 private:
  double last_;
};

// Exhaustive enumeration requested for a problem that is too large.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace ratekit
