#pragma once

#include <vector>

#include "riccati/errors.hpp"

namespace riccati {

// Scalar Riccati equation  dx/dt + k x^2 - 2 a x - q = 0,  x(0) = d,
// with k > 0, q >= 0, d >= 0 and a^2 + q^2 > 0.
struct ScalarProblem {
  double k;
  double a;
  double q;
  double d = 0.0;
};

void validate(const ScalarProblem& p);  // throws DomainError on bad data

// Closed-form quantities attached to a scalar problem:
//   x_star  positive root of k x^2 - 2 a x - q = 0
//   x_minus the other root
//   tau     relaxation time 1 / (2 sqrt(a^2 + k q))
//   alpha = 1/(2 tau) - |a|,  beta = 1/(2 tau) + |a|
struct ScalarDiagnostics {
  double x_star;
  double x_minus;
  double tau;
  double alpha;
  double beta;
};

ScalarDiagnostics diagnostics(const ScalarProblem& p);

// Decomposition a = a_plus - a_minus with both parts nonnegative.  The
// complementary split (a_plus * a_minus = 0) is the default; the matrix
// scheme at n = 1 corresponds to the generalized split (mu/2, mu/2 - a).
struct SignSplit {
  double a_plus;
  double a_minus;
  static SignSplit complementary(double a);
};

// One step of the homographic scheme:
//   x' = ((1 + 2 a+ dt) x + q dt) / (k dt x + 1 + 2 a- dt)
// Positive for every x >= 0, dt > 0.
double homographic_step(const ScalarProblem& p, double x, double dt);
double homographic_step(const ScalarProblem& p, double x, double dt, const SignSplit& split);

// False iff 1 + 2|a| dt - k q dt^2 vanishes, in which case the homographic
// map is constant and useless for time stepping.
bool dt_admissible(const ScalarProblem& p, double dt);

// Exact solution x(t; d) of the scalar equation.  Throws DomainError when
// the initial condition lies outside the closed-form denominator's
// positivity region.
double exact_solution(const ScalarProblem& p, double t);

// Ratio of the geometric sequence u_j = (x* - x_j) / (x_j - x_-);
// absolute value < 1 whenever dt_admissible holds.
double geometric_ratio(const ScalarProblem& p, double dt);
double geometric_ratio(const ScalarProblem& p, double dt, const SignSplit& split);

// phi(dt) = 1 + (tau/dt) log((1 - alpha dt)/(1 + beta dt)) measures the
// per-step deviation of the discrete contraction from exp(-dt/tau).
double contraction_defect(const ScalarProblem& p, double dt);

// Hypothesis box for the global error bound: initial data within
// [-1/(k tau) + eta, C] of x*, with 0 < eta < 1/(k tau) and C > 0.
struct ErrorBoundParams {
  double C;
  double eta;
};

// Constants (A, B) of the global error estimate
//   |x(j dt; d) - x_j(dt; d_delta)| <= A (dt^p + |d - d_delta|),  dt <= B
// with p = 2 for a = 0 and p = 1 otherwise.  A dominates both the
// initial-data and the scheme contributions.
struct ErrorBoundConstants {
  double A;
  double B;
};

ErrorBoundConstants error_bound_constants(const ScalarProblem& p, const ErrorBoundParams& params);

// Runs the scheme to t_end for every dt in the list, measuring the maximum
// error against the closed-form solution, and fits the log-log slope.
struct OrderStudy {
  std::vector<double> dts;
  std::vector<double> max_errors;
  double slope;
};

OrderStudy order_study(const ScalarProblem& p, const std::vector<double>& dt_list,
                       double t_end, double d_delta);

}  // namespace riccati
