#include "riccati/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "riccati/lyapunov.hpp"

namespace riccati {

namespace {

constexpr double kPsdTol = 1e-10;

void validate(const RiccatiProblem& p) {
  const std::size_t n = p.K.dim();
  if (p.A.rows() != n || p.A.cols() != n || p.Q.dim() != n || p.X0.dim() != n)
    throw DomainError("RiccatiProblem: dimension mismatch");
  if (!is_psd(p.K, kPsdTol)) throw DomainError("RiccatiProblem: K must be PSD");
  if (!is_psd(p.Q, kPsdTol)) throw DomainError("RiccatiProblem: Q must be PSD");
  if (!is_psd(p.X0, kPsdTol)) throw DomainError("RiccatiProblem: X0 must be PSD");
}

void validate(const SchemeParams& p) {
  if (!(p.dt > 0.0)) throw DomainError("SchemeParams: dt must be positive");
  if (!(p.mu > 0.0)) throw DomainError("SchemeParams: mu must be positive");
  if (!(p.steady_tol > 0.0)) throw DomainError("SchemeParams: steady_tol must be positive");
}

StepRecord make_record(const RiccatiProblem& prob, std::size_t j, double dt, SymMatrix x) {
  StepRecord rec;
  rec.index = j;
  rec.t = static_cast<double>(j) * dt;
  rec.eigenvalues = sym_eigen(x).eigenvalues;
  rec.min_eig = rec.eigenvalues.front();
  rec.are_residual = are_residual(prob, x);
  rec.X = std::move(x);
  return rec;
}

}  // namespace

RiccatiProblem::RiccatiProblem(Matrix a, SymMatrix k, SymMatrix q)
    : RiccatiProblem(std::move(a), std::move(k), std::move(q), SymMatrix()) {}

RiccatiProblem::RiccatiProblem(Matrix a, SymMatrix k, SymMatrix q, SymMatrix x0)
    : A(std::move(a)), K(std::move(k)), Q(std::move(q)), X0(std::move(x0)) {
  if (X0.dim() == 0) X0 = SymMatrix(K.dim());
  validate(*this);
}

MuSelection select_mu(const Matrix& a, double margin) {
  if (a.rows() != a.cols()) throw DomainError("select_mu: A must be square");
  const double lam_max = max_eigenvalue(symmetrize(add(a, transpose(a))));
  const double mu = std::max(lam_max, 0.0) + margin;
  return {mu, shift_condition_holds(a, mu)};
}

bool shift_condition_holds(const Matrix& a, double mu) {
  if (mu <= 0.0) return false;
  return mu > max_eigenvalue(symmetrize(add(a, transpose(a))));
}

Matrix implicit_shift(const Matrix& a, double mu) {
  Matrix m = scale(a, -1.0);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += 0.5 * mu;
  return m;
}

SymMatrix harmonic_step(const RiccatiProblem& prob, const SchemeParams& params,
                        const SymMatrix& x) {
  validate(params);
  const std::size_t n = prob.dim();
  if (x.dim() != n) throw DomainError("harmonic_step: dimension mismatch");

  // S_j = I/2 + (dt/2) K X_j + dt M
  Matrix s = multiply(prob.K.full(), x.full());
  s = scale(s, 0.5 * params.dt);
  s = add(s, scale(implicit_shift(prob.A, params.mu), params.dt));
  for (std::size_t i = 0; i < n; ++i) s(i, i) += 0.5;

  // Y_j = (1 + mu dt) X_j + dt Q
  const SymMatrix y = add(scale(x, 1.0 + params.mu * params.dt), scale(prob.Q, params.dt));

  return solve_lyapunov(s, y);
}

double are_residual(const RiccatiProblem& prob, const SymMatrix& x) {
  const Matrix xf = x.full();
  const Matrix xkx = multiply(xf, multiply(prob.K.full(), xf));
  const Matrix atx = multiply(transpose(prob.A), xf);
  const Matrix xa = multiply(xf, prob.A);
  Matrix r = subtract(subtract(xkx, atx), xa);
  r = subtract(r, prob.Q.full());
  return frobenius_norm(r);
}

Trajectory integrate(const RiccatiProblem& prob, const SchemeParams& params, double t_end,
                     const std::string& label) {
  validate(params);
  if (!(t_end >= 0.0)) throw DomainError("integrate: t_end must be nonnegative");

  Trajectory traj;
  traj.label = label;
  traj.dt = params.dt;
  traj.status = RunStatus::reached_t_end;

  const auto steps =
      static_cast<std::size_t>(std::floor(t_end / params.dt * (1.0 + 1e-12) + 1e-12));
  traj.records.reserve(steps + 1);
  SymMatrix x = prob.X0;
  traj.records.push_back(make_record(prob, 0, params.dt, x));
  for (std::size_t j = 1; j <= steps; ++j) {
    x = harmonic_step(prob, params, x);
    traj.records.push_back(make_record(prob, j, params.dt, x));
  }
  return traj;
}

SteadyResult solve_steady(const RiccatiProblem& prob, const SchemeParams& params,
                          const std::string& label, bool record) {
  validate(params);

  Trajectory traj;
  traj.label = label;
  traj.dt = params.dt;
  traj.status = RunStatus::max_steps;

  SymMatrix x = prob.X0;
  if (record) traj.records.push_back(make_record(prob, 0, params.dt, x));
  bool converged = false;
  for (std::size_t j = 1; j <= params.max_steps; ++j) {
    SymMatrix next = harmonic_step(prob, params, x);
    const double diff = frobenius_norm(subtract(next, x));
    const double scale_ref = 1.0 + frobenius_norm(x);
    x = std::move(next);
    if (record) traj.records.push_back(make_record(prob, j, params.dt, x));
    if (diff <= params.steady_tol * scale_ref) {
      converged = true;
      traj.status = RunStatus::converged;
      break;
    }
  }
  return {std::move(x), std::move(traj), converged};
}

bool monotonicity_condition(const RiccatiProblem& prob, const SchemeParams& params,
                            const SymMatrix& x_inf) {
  validate(params);
  const double q_min = min_eigenvalue(prob.Q);
  if (!(q_min > 1e-12 * std::max(1.0, frobenius_norm(prob.Q)))) return false;
  const SymMatrix kx = symmetrize(multiply(prob.K.full(), x_inf.full()));
  return max_eigenvalue(kx) < params.mu + 1.0 / params.dt;
}

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::reached_t_end: return "reached_t_end";
    case RunStatus::converged: return "converged";
    case RunStatus::max_steps: return "max_steps";
    case RunStatus::diverged: return "diverged";
  }
  return "unknown";
}

}  // namespace riccati
