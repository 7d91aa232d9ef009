#pragma once

#include <stdexcept>
#include <string>

namespace thermcap {

/// Argument outside the mathematical domain of an operation (negative photon
/// number, transmissivity outside (0, 1], NaN, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Covariance or density matrix that does not describe a physical state.
class UnphysicalStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Fock-space truncation, joint-dimension cap or quadrature grid is too
/// small for the requested accuracy. The message names the violated bound.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] void throw_domain(const std::string& what, double value);

}  // namespace detail

}  // namespace thermcap
