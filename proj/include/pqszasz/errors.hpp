#pragma once

#include <stdexcept>
#include <string>

namespace pqszasz {

/// Invalid parameters or arguments (bad (p,q) ordering, negative x, k > n, ...).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A truncated series hit its term cap before the tail criterion was met.
class NonConvergence : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A user function returned inf/nan at an operator node.
class NonFiniteValue : public std::domain_error {
public:
  NonFiniteValue(const std::string& what, std::size_t index)
      : std::domain_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

} // namespace pqszasz
