#pragma once

#include <stdexcept>
#include <string>

namespace riccati {

// Base class for failures of the numerical kernels (eigensolver stall,
// singular linear systems, diverged trajectories).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cyclic Jacobi did not reach the requested off-diagonal level.
class EigenSolverError : public NumericalError {
 public:
  EigenSolverError(const std::string& msg, double off_diagonal_norm)
      : NumericalError(msg), off_diagonal_norm(off_diagonal_norm) {}
  double off_diagonal_norm;
};

// Gaussian elimination hit a pivot below the singularity threshold.
class SingularSystemError : public NumericalError {
 public:
  SingularSystemError(const std::string& msg, double pivot, std::size_t column)
      : NumericalError(msg), pivot(pivot), column(column) {}
  double pivot;
  std::size_t column;
};

// The assembled Lyapunov system S^T X + X S = Y is singular.  Happens when
// sym(S) fails to be positive definite, e.g. when S carries an eigenvalue
// pair (lambda, -lambda).
class LyapunovSingularError : public NumericalError {
 public:
  LyapunovSingularError(const std::string& msg, double pivot, std::size_t column)
      : NumericalError(msg), pivot(pivot), column(column) {}
  double pivot;
  std::size_t column;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Reference data file missing or failed its integrity checks.
class DataFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace riccati
