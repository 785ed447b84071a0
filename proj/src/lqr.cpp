#include "riccati/lqr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace riccati {

namespace {

constexpr double kPsdTol = 1e-10;

// R^{-1} N column by column
Matrix solve_spd(const SymMatrix& r, const Matrix& rhs) {
  const Matrix rf = r.full();
  Matrix out(rhs.rows(), rhs.cols());
  std::vector<double> col(rhs.rows());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    for (std::size_t i = 0; i < rhs.rows(); ++i) col[i] = rhs(i, j);
    const std::vector<double> x = solve_linear(rf, col);
    for (std::size_t i = 0; i < rhs.rows(); ++i) out(i, j) = x[i];
  }
  return out;
}

}  // namespace

ControlPlant::ControlPlant(Matrix a, Matrix b, SymMatrix r, SymMatrix q)
    : ControlPlant(std::move(a), std::move(b), std::move(r), std::move(q), SymMatrix()) {}

ControlPlant::ControlPlant(Matrix a, Matrix b, SymMatrix r, SymMatrix q, SymMatrix d)
    : A(std::move(a)), B(std::move(b)), R(std::move(r)), Q(std::move(q)), D(std::move(d)) {
  if (D.dim() == 0) D = SymMatrix(A.rows());
  if (A.rows() != A.cols() || B.rows() != A.rows() || R.dim() != B.cols() ||
      Q.dim() != A.rows() || D.dim() != A.rows())
    throw DomainError("ControlPlant: dimension mismatch");
  if (!(min_eigenvalue(R) > 1e-12 * frobenius_norm(R)))
    throw DomainError("ControlPlant: R must be strictly positive definite");
  if (!is_psd(Q, kPsdTol)) throw DomainError("ControlPlant: Q must be PSD");
  if (!is_psd(D, kPsdTol)) throw DomainError("ControlPlant: D must be PSD");
}

SymMatrix control_gram(const ControlPlant& plant) {
  // K = B (R^{-1} B^T); symmetrize to make the storage exact
  const Matrix rinv_bt = solve_spd(plant.R, transpose(plant.B));
  return symmetrize(multiply(plant.B, rinv_bt));
}

Matrix feedback_gain(const ControlPlant& plant, const SymMatrix& x) {
  if (x.dim() != plant.state_dim()) throw DomainError("feedback_gain: dimension mismatch");
  return solve_spd(plant.R, multiply(transpose(plant.B), x.full()));
}

ClosedLoopTrajectory simulate_closed_loop(const ControlPlant& plant, const Matrix& gain,
                                          const std::vector<double>& y0, double dt_sim,
                                          double t_end) {
  if (!(dt_sim > 0.0)) throw DomainError("simulate_closed_loop: dt_sim must be positive");
  if (y0.size() != plant.state_dim())
    throw DomainError("simulate_closed_loop: y0 dimension mismatch");

  const Matrix closed = subtract(plant.A, multiply(plant.B, gain));
  const double dt = std::min(dt_sim, 0.1 / std::max(frobenius_norm(closed), 1e-30));
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-12));

  ClosedLoopTrajectory traj;
  traj.dt = dt;
  const double guard = 1e12 * (1.0 + std::sqrt(std::inner_product(
                                        y0.begin(), y0.end(), y0.begin(), 0.0)));

  auto record = [&](double t, const std::vector<double>& y) {
    traj.times.push_back(t);
    traj.states.push_back(y);
    std::vector<double> u = multiply(gain, y);
    for (double& v : u) v = -v;
    traj.controls.push_back(std::move(u));
  };

  std::vector<double> y = y0;
  record(0.0, y);
  for (std::size_t s = 1; s <= steps; ++s) {
    const std::vector<double> k1 = multiply(closed, y);
    std::vector<double> tmp(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
    const std::vector<double> k2 = multiply(closed, tmp);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
    const std::vector<double> k3 = multiply(closed, tmp);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + dt * k3[i];
    const std::vector<double> k4 = multiply(closed, tmp);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      norm2 += y[i] * y[i];
    }
    if (!std::isfinite(norm2) || std::sqrt(norm2) > guard) {
      traj.diverged = true;
      return traj;
    }
    record(static_cast<double>(s) * dt, y);
  }
  return traj;
}

namespace {

double quad_form(const SymMatrix& w, const std::vector<double>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += w(i, i) * v[i] * v[i];
    for (std::size_t j = i + 1; j < v.size(); ++j) s += 2.0 * w(i, j) * v[i] * v[j];
  }
  return s;
}

}  // namespace

double quadratic_cost(const ControlPlant& plant, const std::vector<std::vector<double>>& states,
                      const std::vector<std::vector<double>>& controls, double dt) {
  if (states.size() != controls.size() || states.empty())
    throw DomainError("quadratic_cost: state and control grids must match");
  if (!(dt > 0.0)) throw DomainError("quadratic_cost: dt must be positive");

  double qy = 0.0, ru = 0.0;
  const std::size_t m = states.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double w = (i == 0 || i + 1 == m) ? 0.5 : 1.0;
    qy += w * quad_form(plant.Q, states[i]);
    ru += w * quad_form(plant.R, controls[i]);
  }
  return 0.5 * dt * (qy + ru) + 0.5 * quad_form(plant.D, states.back());
}

double quadratic_cost(const ControlPlant& plant, const ClosedLoopTrajectory& traj) {
  return quadratic_cost(plant, traj.states, traj.controls, traj.dt);
}

}  // namespace riccati
