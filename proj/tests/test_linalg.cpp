#include <doctest.h>

#include <cmath>
#include <random>

#include "riccati/linalg.hpp"
#include "support.hpp"

using namespace riccati;

TEST_SUITE("linalg") {

TEST_CASE("sym_eigen: identity") {
  const Spectrum sp = sym_eigen(SymMatrix::identity(3));
  for (double ev : sp.eigenvalues) CHECK(ev == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sym_eigen: 2x2 with eigenvalues 1 and 100") {
  SymMatrix s(2);
  s.set(0, 0, 50.5);
  s.set(0, 1, -49.5);
  s.set(1, 1, 50.5);
  const Spectrum sp = sym_eigen(s);
  CHECK(sp.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sp.eigenvalues[1] == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("sym_eigen: indefinite off-diagonal pair") {
  SymMatrix s(2);
  s.set(0, 1, -249.0);
  const Spectrum sp = sym_eigen(s);
  CHECK(sp.eigenvalues[0] == doctest::Approx(-249.0).epsilon(1e-12));
  CHECK(sp.eigenvalues[1] == doctest::Approx(249.0).epsilon(1e-12));
}

TEST_CASE("sym_eigen: orthonormality and residual invariants") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const SymMatrix s = testsupport::random_sym(rng, n, -10.0, 10.0);
    const Spectrum sp = sym_eigen(s);

    // ||V^T V - I||_max
    const Matrix vtv = multiply(transpose(sp.eigenvectors), sp.eigenvectors);
    double ortho = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        ortho = std::max(ortho, std::abs(vtv(i, j) - (i == j ? 1.0 : 0.0)));
    CHECK(ortho <= 1e-10);

    // || S v_k - lambda_k v_k ||_2
    const Matrix sf = s.full();
    for (std::size_t k = 0; k < n; ++k) {
      double res2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double sv = 0.0;
        for (std::size_t j = 0; j < n; ++j) sv += sf(i, j) * sp.eigenvectors(j, k);
        const double r = sv - sp.eigenvalues[k] * sp.eigenvectors(i, k);
        res2 += r * r;
      }
      CHECK(std::sqrt(res2) <= 1e-9 * (1.0 + std::abs(sp.eigenvalues[k])));
    }

    // reconstruction ||V diag V^T - S||_F and trace identity
    Matrix recon(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double v = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          v += sp.eigenvectors(i, k) * sp.eigenvalues[k] * sp.eigenvectors(j, k);
        recon(i, j) = v;
      }
    CHECK(frobenius_norm(subtract(recon, sf)) <= 1e-8 * std::max(1e-30, frobenius_norm(s)));

    double eig_sum = 0.0;
    for (double ev : sp.eigenvalues) eig_sum += ev;
    CHECK(eig_sum == doctest::Approx(trace(s)).epsilon(1e-9));
  }
}

TEST_CASE("solve_linear: identity, diagonal and permutation") {
  CHECK(solve_linear(Matrix::identity(2), {3.0, -1.0}) == std::vector<double>{3.0, -1.0});

  Matrix d(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 4.0;
  const auto x = solve_linear(d, {2.0, 4.0});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(1.0));

  Matrix p(2, 2);
  p(0, 1) = 1.0;
  p(1, 0) = 1.0;  // forces the pivoting path
  const auto y = solve_linear(p, {5.0, 7.0});
  CHECK(y[0] == doctest::Approx(7.0));
  CHECK(y[1] == doctest::Approx(5.0));
}

TEST_CASE("solve_linear: singular matrix throws") {
  Matrix z(2, 2);
  CHECK_THROWS_AS(solve_linear(z, {1.0, 0.0}), SingularSystemError);
}

TEST_CASE("solve_linear: residual on random well-conditioned systems") {
  std::mt19937_64 rng(7);
  int used = 0;
  for (int trial = 0; trial < 60 && used < 25; ++trial) {
    const std::size_t n = 2 + trial % 7;
    Matrix m = testsupport::random_matrix(rng, n, n, -5.0, 5.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += 10.0;  // keep conditioning mild
    std::vector<double> b(n);
    for (auto& v : b) v = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);

    const auto x = solve_linear(m, b);
    const auto mx = multiply(m, x);
    double resid = 0.0, xmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      resid = std::max(resid, std::abs(mx[i] - b[i]));
      xmax = std::max(xmax, std::abs(x[i]));
    }
    CHECK(resid <= 1e-10 * max_row_sum_norm(m) * std::max(xmax, 1e-30));
    ++used;
  }
  CHECK(used == 25);
}

TEST_CASE("min_eigenvalue and is_psd") {
  CHECK(is_psd(SymMatrix(3), 1e-12));  // zero matrix sits on the cone boundary

  const SymMatrix neg = SymMatrix::diagonal({1.0, -0.5});
  CHECK_FALSE(is_psd(neg, 1e-12));
  CHECK(min_eigenvalue(neg) == doctest::Approx(-0.5));

  SymMatrix root(2);
  root.set(0, 0, 5.5);
  root.set(0, 1, -4.5);
  root.set(1, 1, 5.5);
  CHECK(is_psd(root, 1e-12));
  CHECK(min_eigenvalue(root) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_eigenvalue(root) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("matrix plumbing: transpose, symmetrize, norms") {
  std::mt19937_64 rng(11);
  const Matrix m = testsupport::random_matrix(rng, 4, 4, -2.0, 2.0);
  const Matrix mt = transpose(m);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(mt(j, i) == m(i, j));

  const SymMatrix s = symmetrize(m);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(s(i, j) == doctest::Approx(0.5 * (m(i, j) + m(j, i))).epsilon(1e-15));

  CHECK(frobenius_norm(s) == doctest::Approx(frobenius_norm(s.full())).epsilon(1e-13));
}

}  // TEST_SUITE
