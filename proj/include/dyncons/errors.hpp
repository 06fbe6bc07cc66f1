/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every dyncons module.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dyncons {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameter values or configuration (non-positive rates, bad grids).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A right-hand side or map was evaluated outside its domain (N <= 0, N + alpha P = 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The interior equilibrium does not exist (1 + alpha delta <= delta).
class ExistenceError : public Error {
 public:
  using Error::Error;
};

/// The continuous-system stability conditions fail, so a derived quantity is meaningless.
class ConditionError : public Error {
 public:
  using Error::Error;
};

/// Adaptive integration could not proceed (step size underflow).
class StepFailure : public Error {
 public:
  using Error::Error;
};

/// An iterate became NaN or infinite.
class NonFiniteError : public Error {
 public:
  NonFiniteError(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}

  [[nodiscard]] std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace dyncons
