#pragma once

#include <stdexcept>
#include <string>

namespace sp2eig {

/// An internal numerical consistency check failed: a quantity the algebra
/// guarantees did not hold in floating point. Not recoverable by the
/// caller; the CLI maps this to exit code 2.
struct numeric_fault : std::runtime_error {
  explicit numeric_fault(const std::string& what) : std::runtime_error(what) {}
};

/// A linear system whose pivot fell below the rank threshold.
struct singular_system_error : std::invalid_argument {
  explicit singular_system_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// The Cayley path is undefined for the requested (A, sigma, t).
struct path_undefined_error : std::domain_error {
  explicit path_undefined_error(const std::string& what)
      : std::domain_error(what) {}
};

}  // namespace sp2eig
