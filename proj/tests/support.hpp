#pragma once

// Shared helpers for the test suites: seeded random problem generators and
// a scalar RK4 reference integrator kept independent of the library's
// closed forms.

#include <cmath>
#include <random>
#include <vector>

#include "riccati/linalg.hpp"
#include "riccati/scalar.hpp"

namespace testsupport {

inline riccati::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                     double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  riccati::Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline riccati::SymMatrix random_sym(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  riccati::SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s.set(i, j, dist(rng));
  return s;
}

// Gram matrix G^T G: PSD, generically full rank.
inline riccati::SymMatrix random_psd(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  const riccati::Matrix g = random_matrix(rng, n, n, -scale, scale);
  return riccati::symmetrize(riccati::multiply(riccati::transpose(g), g));
}

// Rank-deficient PSD matrix from a thin factor.
inline riccati::SymMatrix random_psd_singular(std::mt19937_64& rng, std::size_t n,
                                              double scale = 1.0) {
  const std::size_t r = n > 1 ? n - 1 : 1;
  const riccati::Matrix g = random_matrix(rng, r, n, -scale, scale);
  return riccati::symmetrize(riccati::multiply(riccati::transpose(g), g));
}

// Classical RK4 on dx/dt = -k x^2 + 2 a x + q; reference oracle for the
// closed-form scalar solution.
inline double rk4_scalar(const riccati::ScalarProblem& p, double t_end, std::size_t steps) {
  const double dt = t_end / static_cast<double>(steps);
  auto f = [&p](double x) { return -p.k * x * x + 2.0 * p.a * x + p.q; };
  double x = p.d;
  for (std::size_t i = 0; i < steps; ++i) {
    const double k1 = f(x);
    const double k2 = f(x + 0.5 * dt * k1);
    const double k3 = f(x + 0.5 * dt * k2);
    const double k4 = f(x + dt * k3);
    x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return x;
}

}  // namespace testsupport
