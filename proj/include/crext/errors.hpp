#pragma once

#include <stdexcept>
#include <string>

namespace crext {

/// Argument outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Gamma-function or linear-factor pole was hit (resonant parameters).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative or adaptive numerical procedure failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user configuration (CLI / suite config).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace crext
