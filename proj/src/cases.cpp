#include "riccati/cases.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef RICCATI_DATA_DIR_DEFAULT
#define RICCATI_DATA_DIR_DEFAULT "data"
#endif

namespace riccati {

CaseSpec square_root_case() {
  const std::size_t n = 2;
  Matrix a(n, n);
  SymMatrix q(n);
  q.set(0, 0, 50.5);
  q.set(0, 1, -49.5);
  q.set(1, 1, 50.5);
  SymMatrix root(n);
  root.set(0, 0, 5.5);
  root.set(0, 1, -4.5);
  root.set(1, 1, 5.5);

  CaseSpec spec{"square-root", RiccatiProblem(a, SymMatrix::identity(n), q), std::nullopt,
                root};
  return spec;
}

CaseSpec oscillator_case(double alpha, double omega2, double delta, double b) {
  if (!(alpha > 0.0)) throw DomainError("oscillator_case: alpha must be positive");
  Matrix a(2, 2);
  a(0, 1) = 1.0;
  a(1, 0) = -omega2;
  a(1, 1) = -2.0 * delta;
  Matrix bmat(2, 1);
  bmat(1, 0) = b;
  SymMatrix r(1);
  r.set(0, 0, alpha);
  const SymMatrix q = SymMatrix::diagonal({0.5, 0.5});

  ControlPlant plant(a, bmat, r, q);
  RiccatiProblem problem(a, control_gram(plant), q);
  return CaseSpec{"oscillator", std::move(problem), std::move(plant), std::nullopt};
}

Matrix vehicle_dynamics() {
  // odd states (0-based even indices): velocities, unit drag
  // even states: separations, d/dt sep_i = v_i - v_{i+1}
  Matrix a(9, 9);
  for (std::size_t i = 0; i < 5; ++i) a(2 * i, 2 * i) = -1.0;
  for (std::size_t i = 0; i < 4; ++i) {
    a(2 * i + 1, 2 * i) = 1.0;
    a(2 * i + 1, 2 * i + 2) = -1.0;
  }
  return a;
}

CaseSpec vehicles_case() { return vehicles_case(vehicle_dynamics()); }

CaseSpec vehicles_case(const Matrix& a) {
  if (a.rows() != 9 || a.cols() != 9) throw DomainError("vehicles_case: A must be 9x9");
  const SymMatrix k = SymMatrix::diagonal({1, 0, 1, 0, 1, 0, 1, 0, 1});
  const SymMatrix q = SymMatrix::diagonal({0, 10, 0, 10, 0, 10, 0, 10, 0});
  return CaseSpec{"vehicles", RiccatiProblem(a, k, q), std::nullopt, std::nullopt};
}

CaseSpec wave_case(std::size_t n_modes, double c, double length, double alpha, double beta) {
  return wave_case(Matrix::identity(n_modes), n_modes, c, length, alpha, beta);
}

CaseSpec wave_case(const Matrix& actuator_coupling, std::size_t n_modes, double c,
                   double length, double alpha, double beta) {
  if (n_modes < 1) throw DomainError("wave_case: need at least one mode");
  if (!(alpha > 0.0) || !(beta > 0.0) || !(c > 0.0) || !(length > 0.0))
    throw DomainError("wave_case: parameters must be positive");
  if (actuator_coupling.rows() != n_modes)
    throw DomainError("wave_case: actuator coupling must have one row per mode");

  const std::size_t n = 2 * n_modes;
  const std::size_t m = actuator_coupling.cols();
  constexpr double pi = 3.14159265358979323846;

  // state (y_1..y_N, y_1'..y_N'):  d/dt Y = [[0, I], [-Lambda, 0]] Y + [0; C] U
  Matrix a(n, n);
  for (std::size_t j = 0; j < n_modes; ++j) {
    a(j, n_modes + j) = 1.0;
    const double lam = std::pow(static_cast<double>(j + 1) * pi / length, 2);
    a(n_modes + j, j) = -c * c * lam;
  }
  Matrix b(n, m);
  for (std::size_t j = 0; j < n_modes; ++j)
    for (std::size_t i = 0; i < m; ++i) b(n_modes + j, i) = actuator_coupling(j, i);

  SymMatrix r(m);
  for (std::size_t i = 0; i < m; ++i) r.set(i, i, alpha);
  SymMatrix q(n);
  for (std::size_t i = 0; i < n; ++i) q.set(i, i, beta);

  ControlPlant plant(a, b, r, q);
  RiccatiProblem problem(a, control_gram(plant), q);
  return CaseSpec{"wave", std::move(problem), std::move(plant), std::nullopt};
}

std::string default_data_dir() {
  if (const char* env = std::getenv("RICCATI_DATA_DIR"); env && *env) return env;
  return RICCATI_DATA_DIR_DEFAULT;
}

SymMatrix load_vehicle_reference(const std::string& data_dir) {
  const std::string path = data_dir + "/vehicles_reference.txt";
  std::ifstream in(path);
  if (!in) throw DataFileError("reference data file not found: " + path);

  constexpr std::size_t n = 9;
  Matrix raw(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(in >> raw(i, j)))
        throw DataFileError("reference data file truncated or malformed: " + path);

  if (!all_finite(raw)) throw DataFileError("reference data contains non-finite entries");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (raw(i, j) != raw(j, i))
        throw DataFileError("reference data failed the symmetry checksum");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      if (std::abs(raw(i, j) - sign * raw(n - 1 - i, n - 1 - j)) > 1e-10)
        throw DataFileError("reference data failed the centro-symmetry checksum");
    }
  const struct {
    std::size_t i, j;
    double value;
  } anchors[] = {{0, 0, 1.3630206938},
                 {0, 1, 2.6172154724},
                 {4, 4, 1.8056048615},
                 {8, 8, 1.3630206938}};
  for (const auto& a : anchors)
    if (std::abs(raw(a.i, a.j) - a.value) > 1e-12)
      throw DataFileError("reference data failed an anchor-entry checksum");

  return symmetrize(raw);
}

ReferenceValidation validate_vehicle_reference(const Matrix& a, const std::string& data_dir) {
  if (a.rows() != 9 || a.cols() != 9)
    throw DomainError("validate_vehicle_reference: A must be 9x9");
  const SymMatrix x_ref = load_vehicle_reference(data_dir);
  const CaseSpec spec = vehicles_case(a);
  const double rel = are_residual(spec.problem, x_ref) / frobenius_norm(spec.problem.Q);
  return {rel, rel <= 1e-6};
}

}  // namespace riccati
