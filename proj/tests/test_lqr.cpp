#include <doctest.h>

#include <cmath>
#include <random>

#include "riccati/cases.hpp"
#include "riccati/lqr.hpp"
#include "riccati/scheme.hpp"
#include "support.hpp"

using namespace riccati;

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

TEST_SUITE("lqr") {

TEST_CASE("control_gram: single-input oscillator, identity, zero") {
  Matrix b(2, 1);
  b(1, 0) = 1.0;
  SymMatrix r(1);
  r.set(0, 0, 0.01);
  const ControlPlant plant(Matrix(2, 2), b, r, SymMatrix::identity(2));
  const SymMatrix k = control_gram(plant);
  CHECK(k(0, 0) == 0.0);
  CHECK(k(0, 1) == 0.0);
  CHECK(k(1, 1) == doctest::Approx(100.0).epsilon(1e-12));

  const ControlPlant id(Matrix(3, 3), Matrix::identity(3), SymMatrix::identity(3),
                        SymMatrix::identity(3));
  CHECK(frobenius_norm(subtract(control_gram(id), SymMatrix::identity(3))) <= 1e-13);

  const ControlPlant none(Matrix(2, 2), Matrix(2, 1), SymMatrix::identity(1),
                          SymMatrix::identity(2));
  CHECK(frobenius_norm(control_gram(none)) == 0.0);
}

TEST_CASE("control_gram: symmetric PSD for random plants") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 4, m = 1 + trial % 3;
    const Matrix b = testsupport::random_matrix(rng, n, m, -2.0, 2.0);
    SymMatrix r = testsupport::random_psd(rng, m);
    for (std::size_t i = 0; i < m; ++i) r.add_to(i, i, 0.5);  // strictly PD
    const ControlPlant plant(Matrix(n, n), b, r, SymMatrix(n));
    const SymMatrix k = control_gram(plant);
    CHECK(min_eigenvalue(k) >= -1e-9 * std::max(1.0, frobenius_norm(k)));
  }
}

TEST_CASE("feedback_gain: zero state, scalar case, row selection") {
  Matrix b(2, 1);
  b(1, 0) = 1.0;
  SymMatrix r(1);
  r.set(0, 0, 0.01);
  const ControlPlant plant(Matrix(2, 2), b, r, SymMatrix::identity(2));

  CHECK(frobenius_norm(feedback_gain(plant, SymMatrix(2))) == 0.0);

  SymMatrix x(2);
  x.set(0, 0, 3.0);
  x.set(0, 1, -1.0);
  x.set(1, 1, 2.0);
  const Matrix g = feedback_gain(plant, x);  // (1/r) * b * (row 2 of X)
  CHECK(g.rows() == 1);
  CHECK(g(0, 0) == doctest::Approx(-100.0).epsilon(1e-12));
  CHECK(g(0, 1) == doctest::Approx(200.0).epsilon(1e-12));

  Matrix bs(1, 1);
  bs(0, 0) = 2.0;
  SymMatrix rs(1);
  rs.set(0, 0, 4.0);
  const ControlPlant scalar(Matrix(1, 1), bs, rs, SymMatrix::identity(1));
  SymMatrix xs(1);
  xs.set(0, 0, 6.0);
  CHECK(feedback_gain(scalar, xs)(0, 0) == doctest::Approx(2.0 * 6.0 / 4.0).epsilon(1e-13));
}

TEST_CASE("simulate_closed_loop: decoupled exponential and zero state") {
  const Matrix a = scale(Matrix::identity(2), -1.0);
  const ControlPlant plant(a, Matrix(2, 1), SymMatrix::identity(1), SymMatrix::identity(2));
  const Matrix gain(1, 2);

  const ClosedLoopTrajectory traj = simulate_closed_loop(plant, gain, {1.0, -2.0}, 0.01, 3.0);
  REQUIRE_FALSE(traj.diverged);
  for (std::size_t i = 0; i < traj.times.size(); i += 50) {
    const double expected = std::exp(-traj.times[i]) * norm2({1.0, -2.0});
    CHECK(norm2(traj.states[i]) == doctest::Approx(expected).epsilon(1e-6));
  }

  const ClosedLoopTrajectory zero = simulate_closed_loop(plant, gain, {0.0, 0.0}, 0.01, 1.0);
  for (const auto& y : zero.states) CHECK(norm2(y) == 0.0);
}

TEST_CASE("simulate_closed_loop: steady-state gain stabilizes the oscillator") {
  const CaseSpec spec = oscillator_case(0.01);
  REQUIRE(spec.plant.has_value());
  const SteadyResult res =
      solve_steady(spec.problem, SchemeParams{0.01, 0.1}, spec.name, false);
  REQUIRE(res.converged);
  const Matrix gain = feedback_gain(*spec.plant, res.X_inf);

  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<double> y0{u(rng), u(rng)};
    if (norm2(y0) < 0.1) continue;
    const ClosedLoopTrajectory traj = simulate_closed_loop(*spec.plant, gain, y0, 0.01, 5.0);
    REQUIRE_FALSE(traj.diverged);
    CHECK(norm2(traj.states.back()) < 1e-3 * norm2(y0));
  }
}

TEST_CASE("quadratic_cost: exact values") {
  const ControlPlant plant(Matrix(2, 2), Matrix(2, 1), SymMatrix::identity(1),
                           SymMatrix::identity(2));

  // all-zero trajectories cost nothing
  const std::vector<std::vector<double>> zeros(11, std::vector<double>{0.0, 0.0});
  const std::vector<std::vector<double>> zeroc(11, std::vector<double>{0.0});
  CHECK(quadratic_cost(plant, zeros, zeroc, 0.1) == 0.0);

  // constant y = e1 on [0, 1] with Q = I, u = 0, D = 0 integrates to 1/2
  const std::vector<std::vector<double>> ys(11, std::vector<double>{1.0, 0.0});
  CHECK(quadratic_cost(plant, ys, zeroc, 0.1) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(quadratic_cost(plant, ys, std::vector<std::vector<double>>(3), 0.1),
                  DomainError);
}

TEST_CASE("quadratic_cost: optimal gain beats an inflated gain") {
  const CaseSpec spec = oscillator_case(0.01);
  const SteadyResult res =
      solve_steady(spec.problem, SchemeParams{0.01, 0.1}, spec.name, false);
  REQUIRE(res.converged);
  const Matrix gain = feedback_gain(*spec.plant, res.X_inf);
  const Matrix inflated = scale(gain, 1.5);

  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<double> y0{u(rng), u(rng)};
    const double c_opt =
        quadratic_cost(*spec.plant, simulate_closed_loop(*spec.plant, gain, y0, 0.01, 5.0));
    const double c_bad = quadratic_cost(
        *spec.plant, simulate_closed_loop(*spec.plant, inflated, y0, 0.01, 5.0));
    CHECK(c_opt <= c_bad);
  }
}

TEST_CASE("plant validation: R must be strictly positive definite") {
  CHECK_THROWS_AS(ControlPlant(Matrix(2, 2), Matrix(2, 1), SymMatrix(1), SymMatrix(2)),
                  DomainError);
  CHECK_THROWS_AS(ControlPlant(Matrix(2, 2), Matrix(2, 1), SymMatrix::identity(1),
                               SymMatrix::diagonal({-1.0, 1.0})),
                  DomainError);
}

}  // TEST_SUITE
