#include "riccati/scalar.hpp"

#include <algorithm>
#include <cmath>

namespace riccati {

void validate(const ScalarProblem& p) {
  if (!(p.k > 0.0)) throw DomainError("ScalarProblem: k must be positive");
  if (!(p.q >= 0.0)) throw DomainError("ScalarProblem: q must be nonnegative");
  if (!(p.a * p.a + p.q * p.q > 0.0)) throw DomainError("ScalarProblem: a^2 + q^2 must be positive");
  if (!(p.d >= 0.0)) throw DomainError("ScalarProblem: d must be nonnegative");
}

ScalarDiagnostics diagnostics(const ScalarProblem& p) {
  validate(p);
  const double root = std::sqrt(p.a * p.a + p.k * p.q);
  ScalarDiagnostics d;
  d.x_star = (p.a + root) / p.k;
  d.x_minus = d.x_star - 2.0 * root / p.k;
  d.tau = 1.0 / (2.0 * root);
  d.alpha = 1.0 / (2.0 * d.tau) - std::abs(p.a);
  d.beta = 1.0 / (2.0 * d.tau) + std::abs(p.a);
  return d;
}

SignSplit SignSplit::complementary(double a) {
  return {std::max(a, 0.0), std::max(-a, 0.0)};
}

double homographic_step(const ScalarProblem& p, double x, double dt) {
  return homographic_step(p, x, dt, SignSplit::complementary(p.a));
}

double homographic_step(const ScalarProblem& p, double x, double dt, const SignSplit& split) {
  validate(p);
  if (!(dt > 0.0)) throw DomainError("homographic_step: dt must be positive");
  if (!(x >= 0.0)) throw DomainError("homographic_step: x must be nonnegative");
  if (!(split.a_plus >= 0.0) || !(split.a_minus >= 0.0))
    throw DomainError("homographic_step: split parts must be nonnegative");
  const double numer = (1.0 + 2.0 * split.a_plus * dt) * x + p.q * dt;
  const double denom = p.k * dt * x + 1.0 + 2.0 * split.a_minus * dt;
  return numer / denom;
}

bool dt_admissible(const ScalarProblem& p, double dt) {
  validate(p);
  if (!(dt > 0.0)) throw DomainError("dt_admissible: dt must be positive");
  const double lin = 2.0 * std::abs(p.a) * dt;
  const double quad = p.k * p.q * dt * dt;
  return std::abs(1.0 + lin - quad) > 1e-12 * (1.0 + lin + quad);
}

double exact_solution(const ScalarProblem& p, double t) {
  const ScalarDiagnostics d = diagnostics(p);
  if (!(t >= 0.0)) throw DomainError("exact_solution: t must be nonnegative");
  const double dev = p.d - d.x_star;
  const double decay = std::exp(-t / d.tau);
  const double denom = 1.0 + p.k * d.tau * dev * (1.0 - decay);
  if (!(denom > 0.0))
    throw DomainError("exact_solution: initial condition outside the solution's basin");
  return d.x_star + dev * decay / denom;
}

double geometric_ratio(const ScalarProblem& p, double dt) {
  return geometric_ratio(p, dt, SignSplit::complementary(p.a));
}

double geometric_ratio(const ScalarProblem& p, double dt, const SignSplit& split) {
  if (!dt_admissible(p, dt)) throw DomainError("geometric_ratio: degenerate dt");
  const ScalarDiagnostics d = diagnostics(p);
  return ((1.0 + 2.0 * split.a_minus * dt) * d.x_star - p.q * dt) /
         ((1.0 + 2.0 * split.a_plus * dt) * d.x_star + p.q * dt);
}

double contraction_defect(const ScalarProblem& p, double dt) {
  const ScalarDiagnostics d = diagnostics(p);
  if (!(dt > 0.0)) throw DomainError("contraction_defect: dt must be positive");
  const double num = 1.0 - d.alpha * dt;
  const double den = 1.0 + d.beta * dt;
  if (!(num > 0.0)) throw DomainError("contraction_defect: 1 - alpha dt must stay positive");
  return 1.0 + (d.tau / dt) * std::log(num / den);
}

ErrorBoundConstants error_bound_constants(const ScalarProblem& p, const ErrorBoundParams& params) {
  const ScalarDiagnostics d = diagnostics(p);
  if (!(params.C > 0.0)) throw DomainError("error_bound_constants: C must be positive");
  if (!(params.eta > 0.0 && params.eta < 1.0 / (p.k * d.tau)))
    throw DomainError("error_bound_constants: eta outside (0, 1/(k tau))");

  const double corridor = std::min(params.C, 1.0 / (p.k * d.tau) - params.eta);
  const double data_term = std::pow(1.0 / (p.k * d.tau * params.eta), 2);
  const double e = std::exp(1.0);

  ErrorBoundConstants out;
  if (p.a == 0.0) {
    const double scheme_term =
        (11.0 / (96.0 * e)) * (p.k / (d.tau * params.eta)) * std::pow(corridor, 3);
    out.A = std::max(data_term, scheme_term);
    out.B = d.tau / 2.0;
  } else {
    const double abs_a = std::abs(p.a);
    const double scheme_term =
        (19.0 / (12.0 * e)) * (p.k / params.eta) * std::pow(corridor, 3);
    out.A = std::max(data_term, scheme_term);
    out.B = std::min({d.tau / 2.0, abs_a * d.tau * d.tau, (6.0 / 19.0) / abs_a});
  }
  return out;
}

OrderStudy order_study(const ScalarProblem& p, const std::vector<double>& dt_list,
                       double t_end, double d_delta) {
  if (dt_list.size() < 2) throw DomainError("order_study: need at least two dt values");
  if (!(t_end > 0.0)) throw DomainError("order_study: t_end must be positive");
  if (!(d_delta >= 0.0)) throw DomainError("order_study: d_delta must be nonnegative");

  OrderStudy study;
  study.dts = dt_list;
  for (double dt : dt_list) {
    if (!dt_admissible(p, dt)) throw DomainError("order_study: degenerate dt in list");
    const auto steps = static_cast<std::size_t>(std::floor(t_end / dt * (1.0 + 1e-12) + 1e-12));
    double x = d_delta;
    double max_err = 0.0;
    for (std::size_t j = 1; j <= steps; ++j) {
      x = homographic_step(p, x, dt);
      max_err = std::max(max_err, std::abs(exact_solution(p, static_cast<double>(j) * dt) - x));
    }
    study.max_errors.push_back(max_err);
  }

  // least-squares slope of log(err) against log(dt)
  const std::size_t m = dt_list.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double lx = std::log(study.dts[i]);
    const double ly = std::log(study.max_errors[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  study.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return study;
}

}  // namespace riccati
