#pragma once

#include <cstddef>
#include <vector>

#include "riccati/errors.hpp"

namespace riccati {

// Dense real matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  const std::vector<double>& entries() const { return entries_; }
  std::vector<double>& entries() { return entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

// Dense real symmetric matrix.  Only the upper triangle (including the
// diagonal) is stored, so symmetry holds by construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n, double fill = 0.0)
      : n_(n), tri_(n * (n + 1) / 2, fill) {}

  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(const std::vector<double>& d);

  std::size_t dim() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return tri_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double v) { tri_[index(i, j)] = v; }
  void add_to(std::size_t i, std::size_t j, double v) { tri_[index(i, j)] += v; }

  Matrix full() const;

  const std::vector<double>& packed() const { return tri_; }

 private:
  // (i, j) with i <= j maps to the row-major upper triangle.
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + j;
  }

  std::size_t n_ = 0;
  std::vector<double> tri_;
};

// Eigendecomposition of a symmetric matrix: ascending eigenvalues and the
// matching orthonormal eigenvector columns.
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);
Matrix transpose(const Matrix& a);
double frobenius_norm(const Matrix& a);
double max_row_sum_norm(const Matrix& a);

SymMatrix symmetrize(const Matrix& a);  // (M + M^T) / 2

SymMatrix add(const SymMatrix& a, const SymMatrix& b);
SymMatrix subtract(const SymMatrix& a, const SymMatrix& b);
SymMatrix scale(const SymMatrix& a, double s);
double frobenius_norm(const SymMatrix& a);
double trace(const SymMatrix& a);

std::vector<double> multiply(const Matrix& a, const std::vector<double>& x);

// Gaussian elimination with partial pivoting.  Throws SingularSystemError
// when a pivot falls below 1e-300 * ||M||_inf.
std::vector<double> solve_linear(const Matrix& m, const std::vector<double>& b);

// Cyclic Jacobi rotations until every off-diagonal magnitude is at most
// tol * ||S||_F.  Throws EigenSolverError if the sweep cap is reached.
Spectrum sym_eigen(const SymMatrix& s, double tol = 1e-12);

double min_eigenvalue(const SymMatrix& s);
double max_eigenvalue(const SymMatrix& s);

// True iff min eigenvalue >= -tol * max(1, ||S||_F).
bool is_psd(const SymMatrix& s, double tol);

bool all_finite(const Matrix& a);
bool all_finite(const SymMatrix& a);

}  // namespace riccati
