#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "riccati/linalg.hpp"

namespace riccati {

// Matrix Riccati differential equation
//   dX/dt - (X A + A^T X) + X K X - Q = 0,  X(0) = X0,
// with K, Q, X0 symmetric positive semidefinite and A unconstrained.
struct RiccatiProblem {
  Matrix A;
  SymMatrix K;
  SymMatrix Q;
  SymMatrix X0;

  RiccatiProblem(Matrix a, SymMatrix k, SymMatrix q);
  RiccatiProblem(Matrix a, SymMatrix k, SymMatrix q, SymMatrix x0);

  std::size_t dim() const { return K.dim(); }
};

struct SchemeParams {
  double dt;
  double mu;
  double steady_tol = 1e-12;
  std::size_t max_steps = 200000;
};

struct MuSelection {
  double mu;
  bool condition_satisfied;  // mu I - (A + A^T) strictly positive definite
};

// Smallest safe shift plus a margin: mu = max(lambda_max(A + A^T), 0) + margin.
MuSelection select_mu(const Matrix& a, double margin = 0.1);

// Whether a given shift keeps mu I - (A + A^T) positive definite.  The
// scheme stays usable when this fails (it is a warning, not an error).
bool shift_condition_holds(const Matrix& a, double mu);

// Implicitly treated part of the drift: M = (mu/2) I - A.
Matrix implicit_shift(const Matrix& a, double mu);

struct StepRecord {
  std::size_t index;                 // j
  double t;                          // j * dt
  SymMatrix X;
  std::vector<double> eigenvalues;   // ascending
  double are_residual;
  double min_eig;
};

enum class RunStatus { reached_t_end, converged, max_steps, diverged };

const char* to_string(RunStatus s);

struct Trajectory {
  std::string label;
  double dt = 0.0;
  RunStatus status = RunStatus::reached_t_end;
  std::vector<StepRecord> records;
};

// One implicit step: solve  S_j^T X + X S_j = Y_j  with
//   S_j = I/2 + (dt/2) K X_j + dt M,   Y_j = (1 + mu dt) X_j + dt Q.
// The result is the harmonic-scheme iterate X_{j+1}; it is positive
// semidefinite whenever X_j is.
SymMatrix harmonic_step(const RiccatiProblem& prob, const SchemeParams& params,
                        const SymMatrix& x);

// Frobenius norm of X K X - A^T X - X A - Q (algebraic Riccati residual).
double are_residual(const RiccatiProblem& prob, const SymMatrix& x);

// Fixed-step integration over floor(t_end / dt) steps.  Records the initial
// state and every iterate.
Trajectory integrate(const RiccatiProblem& prob, const SchemeParams& params, double t_end,
                     const std::string& label = "");

struct SteadyResult {
  SymMatrix X_inf;
  Trajectory trajectory;
  bool converged;
};

// Iterates until the relative step difference falls below steady_tol or
// max_steps is reached; non-convergence is flagged, not thrown.
SteadyResult solve_steady(const RiccatiProblem& prob, const SchemeParams& params,
                          const std::string& label = "", bool record = true);

// Monotonicity sufficient conditions: Q positive definite and
// lambda_max(sym(K X_inf)) < mu + 1/dt.
bool monotonicity_condition(const RiccatiProblem& prob, const SchemeParams& params,
                            const SymMatrix& x_inf);

}  // namespace riccati
