#pragma once

#include <stdexcept>
#include <string>

namespace ellint {

/// Argument outside the operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument sits on a pole (gamma at non-positive integers, tan at odd b, ...).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested quantity is infinite, e.g. K(k) at k = 1.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative process (series, extrapolation) did not converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ellint
