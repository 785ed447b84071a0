#pragma once

#include <vector>

#include "riccati/linalg.hpp"

namespace riccati {

// Linear plant dy/dt = A y + B v with quadratic cost
//   J = 1/2 int (Q y, y) + 1/2 int (R v, v) + 1/2 (D y(T), y(T)).
// R must be strictly positive definite; Q and D positive semidefinite.
struct ControlPlant {
  Matrix A;   // n x n
  Matrix B;   // n x m
  SymMatrix R;  // m, PD
  SymMatrix Q;  // n, PSD
  SymMatrix D;  // n, PSD terminal weight

  ControlPlant(Matrix a, Matrix b, SymMatrix r, SymMatrix q);
  ControlPlant(Matrix a, Matrix b, SymMatrix r, SymMatrix q, SymMatrix d);

  std::size_t state_dim() const { return A.rows(); }
  std::size_t input_dim() const { return B.cols(); }
};

// B R^{-1} B^T: the quadratic-term matrix of the Riccati equation.
// Symmetric PSD with rank at most m.
SymMatrix control_gram(const ControlPlant& plant);

// G = R^{-1} B^T X; the feedback law is u = -G y.
Matrix feedback_gain(const ControlPlant& plant, const SymMatrix& x);

struct ClosedLoopTrajectory {
  double dt = 0.0;
  std::vector<double> times;
  std::vector<std::vector<double>> states;    // y at each sample
  std::vector<std::vector<double>> controls;  // u = -G y at each sample
  bool diverged = false;
};

// Classical RK4 on dy/dt = (A - B G) y.  The effective step is
// min(dt_sim, 0.1 / ||A - B G||_F) so the simulator stays well inside its
// own stability region.
ClosedLoopTrajectory simulate_closed_loop(const ControlPlant& plant, const Matrix& gain,
                                          const std::vector<double>& y0, double dt_sim,
                                          double t_end);

// Trapezoidal quadrature of the LQR cost along sampled trajectories.
double quadratic_cost(const ControlPlant& plant, const std::vector<std::vector<double>>& states,
                      const std::vector<std::vector<double>>& controls, double dt);
double quadratic_cost(const ControlPlant& plant, const ClosedLoopTrajectory& traj);

}  // namespace riccati
