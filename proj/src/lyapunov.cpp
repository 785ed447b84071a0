#include "riccati/lyapunov.hpp"

#include <string>

namespace riccati {

SymMatrix lyapunov_operator(const Matrix& s, const SymMatrix& x) {
  if (s.rows() != s.cols() || s.rows() != x.dim())
    throw DomainError("lyapunov_operator: dimension mismatch");
  const std::size_t n = x.dim();
  SymMatrix out(n);
  // (S^T X + X S)_{ij} = sum_k S_{ki} X_{kj} + X_{ik} S_{kj}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double v = 0.0;
      for (std::size_t k = 0; k < n; ++k) v += s(k, i) * x(k, j) + x(i, k) * s(k, j);
      out.set(i, j, v);
    }
  return out;
}

namespace {

// Coordinates of a symmetric matrix in the basis E_ii, (E_ij + E_ji) i<j:
// the diagonal entries first, then the strict upper triangle row by row.
std::vector<double> coordinates(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> c;
  c.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) c.push_back(m(i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c.push_back(m(i, j));
  return c;
}

SymMatrix from_coordinates(std::size_t n, const std::vector<double>& c) {
  SymMatrix m(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, c[k++]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, c[k++]);
  return m;
}

}  // namespace

SymMatrix solve_lyapunov(const Matrix& s, const SymMatrix& y) {
  if (s.rows() != s.cols() || s.rows() != y.dim())
    throw DomainError("solve_lyapunov: dimension mismatch");
  const std::size_t n = y.dim();
  const std::size_t dim = n * (n + 1) / 2;

  Matrix op(dim, dim);
  std::size_t col = 0;
  auto emplace_column = [&](const SymMatrix& basis_element) {
    const std::vector<double> c = coordinates(lyapunov_operator(s, basis_element));
    for (std::size_t r = 0; r < dim; ++r) op(r, col) = c[r];
    ++col;
  };
  for (std::size_t i = 0; i < n; ++i) {
    SymMatrix e(n);
    e.set(i, i, 1.0);
    emplace_column(e);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      SymMatrix e(n);
      e.set(i, j, 1.0);
      emplace_column(e);
    }

  try {
    return from_coordinates(n, solve_linear(op, coordinates(y)));
  } catch (const SingularSystemError& e) {
    throw LyapunovSingularError(
        "solve_lyapunov: assembled symmetric-subspace system is singular "
        "(pivot " + std::to_string(e.pivot) + " in column " +
        std::to_string(e.column) + "); sym(S) is not positive definite",
        e.pivot, e.column);
  }
}

SymMatrix solve_lyapunov(const LyapunovSystem& sys) { return solve_lyapunov(sys.S, sys.Y); }

}  // namespace riccati
