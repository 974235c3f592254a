#pragma once

#include <stdexcept>
#include <string>

namespace curvlab {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different spaces, or a size does not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the documented domain (n <= 3 for Weyl, m < 2 for QK, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A required complex or quaternionic structure is absent.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Input fails a symmetry check. Carries the offending residual.
class SymmetryError : public Error {
 public:
  SymmetryError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// The Jacobi eigensolver hit its sweep cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input files.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvlab
