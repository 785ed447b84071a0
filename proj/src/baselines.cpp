#include "riccati/baselines.hpp"

#include <cmath>

namespace riccati {

SymMatrix riccati_rhs(const RiccatiProblem& prob, const SymMatrix& x) {
  const Matrix xf = x.full();
  const Matrix xa = multiply(xf, prob.A);
  const Matrix xkx = multiply(xf, multiply(prob.K.full(), xf));
  // sym(2 X A) = X A + A^T X for symmetric X
  Matrix f = subtract(scale(xa, 2.0), xkx);
  f = add(f, prob.Q.full());
  return symmetrize(f);
}

namespace {

bool overflowed(const RiccatiProblem& prob, const SymMatrix& x) {
  return !all_finite(x) ||
         frobenius_norm(x) > 1e12 * (1.0 + frobenius_norm(prob.Q));
}

}  // namespace

ExplicitStepResult explicit_step(ExplicitScheme scheme, const RiccatiProblem& prob,
                                 const SymMatrix& x, double dt) {
  if (!(dt > 0.0)) throw DomainError("explicit_step: dt must be positive");
  SymMatrix next(x.dim());
  switch (scheme) {
    case ExplicitScheme::forward_euler:
      next = add(x, scale(riccati_rhs(prob, x), dt));
      break;
    case ExplicitScheme::rk2_midpoint: {
      const SymMatrix mid = add(x, scale(riccati_rhs(prob, x), 0.5 * dt));
      next = add(x, scale(riccati_rhs(prob, mid), dt));
      break;
    }
  }
  return {next, overflowed(prob, next)};
}

Trajectory explicit_integrate(ExplicitScheme scheme, const RiccatiProblem& prob, double dt,
                              std::size_t steps, const std::string& label) {
  Trajectory traj;
  traj.label = label;
  traj.dt = dt;
  traj.status = RunStatus::reached_t_end;
  SymMatrix x = prob.X0;

  auto record = [&](std::size_t j, const SymMatrix& m) {
    StepRecord rec;
    rec.index = j;
    rec.t = static_cast<double>(j) * dt;
    rec.eigenvalues = sym_eigen(m).eigenvalues;
    rec.min_eig = rec.eigenvalues.front();
    rec.are_residual = are_residual(prob, m);
    rec.X = m;
    traj.records.push_back(std::move(rec));
  };

  record(0, x);
  for (std::size_t j = 1; j <= steps; ++j) {
    const ExplicitStepResult r = explicit_step(scheme, prob, x, dt);
    if (r.diverged) {
      traj.status = RunStatus::diverged;
      return traj;  // truncated: diverged iterate not recorded
    }
    x = r.X;
    record(j, x);
  }
  return traj;
}

const char* to_string(ExplicitScheme s) {
  switch (s) {
    case ExplicitScheme::forward_euler: return "euler";
    case ExplicitScheme::rk2_midpoint: return "rk2";
  }
  return "unknown";
}

}  // namespace riccati
