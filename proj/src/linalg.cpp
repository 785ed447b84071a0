#include "riccati/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace riccati {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, i, 1.0);
  return s;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
  SymMatrix s(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) s.set(i, i, d[i]);
  return s;
}

Matrix SymMatrix::full() const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) {
      const double v = (*this)(i, j);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix add(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries().size(); ++i) c.entries()[i] += b.entries()[i];
  return c;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries().size(); ++i) c.entries()[i] -= b.entries()[i];
  return c;
}

Matrix scale(const Matrix& a, double s) {
  Matrix c = a;
  for (double& v : c.entries()) v *= s;
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (double v : a.entries()) s += v * v;
  return std::sqrt(s);
}

double max_row_sum_norm(const Matrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += std::abs(a(i, j));
    best = std::max(best, row);
  }
  return best;
}

SymMatrix symmetrize(const Matrix& a) {
  SymMatrix s(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) s.set(i, j, 0.5 * (a(i, j) + a(j, i)));
  return s;
}

SymMatrix add(const SymMatrix& a, const SymMatrix& b) {
  SymMatrix c = a;
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i; j < c.dim(); ++j) c.add_to(i, j, b(i, j));
  return c;
}

SymMatrix subtract(const SymMatrix& a, const SymMatrix& b) {
  SymMatrix c = a;
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i; j < c.dim(); ++j) c.add_to(i, j, -b(i, j));
  return c;
}

SymMatrix scale(const SymMatrix& a, double s) {
  SymMatrix c = a;
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i; j < c.dim(); ++j) c.set(i, j, s * a(i, j));
  return c;
}

double frobenius_norm(const SymMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      const double v = a(i, j);
      s += (i == j) ? v * v : 2.0 * v * v;
    }
  return std::sqrt(s);
}

double trace(const SymMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a(i, i);
  return s;
}

std::vector<double> multiply(const Matrix& a, const std::vector<double>& x) {
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::vector<double> solve_linear(const Matrix& m, const std::vector<double>& b) {
  if (m.rows() != m.cols() || m.rows() != b.size())
    throw DomainError("solve_linear: dimension mismatch");
  const std::size_t n = m.rows();
  Matrix a = m;
  std::vector<double> x = b;
  const double pivot_floor = 1e-300 * max_row_sum_norm(m);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) <= pivot_floor)
      throw SingularSystemError("solve_linear: pivot below singularity threshold",
                                a(piv, col), col);
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(col, j), a(piv, j));
      std::swap(x[col], x[piv]);
    }
    const double inv = 1.0 / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) * inv;
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      x[r] -= f * x[col];
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * x[j];
    x[ii] = s / a(ii, ii);
  }
  return x;
}

namespace {

double max_off_diagonal(const Matrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) best = std::max(best, std::abs(a(i, j)));
  return best;
}

}  // namespace

Spectrum sym_eigen(const SymMatrix& s, double tol) {
  if (tol <= 0.0) throw DomainError("sym_eigen: tol must be positive");
  const std::size_t n = s.dim();
  Matrix a = s.full();
  Matrix v = Matrix::identity(n);
  const double threshold = tol * frobenius_norm(s);

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (n > 1 && max_off_diagonal(a) > threshold) {
    if (++sweep > kMaxSweeps)
      throw EigenSolverError("sym_eigen: Jacobi sweeps exhausted", max_off_diagonal(a));
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                             : -1.0 / (-theta + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&a](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

double min_eigenvalue(const SymMatrix& s) { return sym_eigen(s).eigenvalues.front(); }

double max_eigenvalue(const SymMatrix& s) { return sym_eigen(s).eigenvalues.back(); }

bool is_psd(const SymMatrix& s, double tol) {
  return min_eigenvalue(s) >= -tol * std::max(1.0, frobenius_norm(s));
}

bool all_finite(const Matrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](double v) { return std::isfinite(v); });
}

bool all_finite(const SymMatrix& a) {
  return std::all_of(a.packed().begin(), a.packed().end(),
                     [](double v) { return std::isfinite(v); });
}

}  // namespace riccati
