#pragma once

#include <optional>
#include <string>

#include "riccati/lqr.hpp"
#include "riccati/scheme.hpp"

namespace riccati {

// A named benchmark instance.  `known_limit` carries the closed-form
// stationary solution when one exists; `plant` is set when the case comes
// with an explicit (B, R) control structure.
struct CaseSpec {
  std::string name;
  RiccatiProblem problem;
  std::optional<ControlPlant> plant;
  std::optional<SymMatrix> known_limit;
};

// n = 2, A = 0, K = I; the stationary solution is the matrix square root
// of Q, which has eigenvalues (1, 10).
CaseSpec square_root_case();

// Controlled harmonic oscillator y'' + 2 delta y' + omega^2 y = b v.
// R is the scalar control weight alpha (single input).
CaseSpec oscillator_case(double alpha, double omega2 = 250.0, double delta = 0.0,
                         double b = 1.0);

// Drag/separation dynamics of a string of five vehicles (n = 9): odd
// states are vehicle velocities with unit drag and direct control, even
// states are inter-vehicle separations.
Matrix vehicle_dynamics();

// Vehicle-string case.  The cost weights sit on the separation states,
// the layout consistent with the shipped 10-digit reference solution
// (see validate_vehicle_reference).
CaseSpec vehicles_case();
CaseSpec vehicles_case(const Matrix& a);

// Modal truncation of the boundary-distributed control of a 1-D wave
// equation: N sine modes, state (modal positions, modal velocities).
// The actuator shapes default to the eigenmodes themselves, giving C = I.
CaseSpec wave_case(std::size_t n_modes = 5, double c = 1.0, double length = 1.0,
                   double alpha = 1.0, double beta = 10.0);
CaseSpec wave_case(const Matrix& actuator_coupling, std::size_t n_modes, double c,
                   double length, double alpha, double beta);

// Reference data -----------------------------------------------------------

// Directory holding the reference tables: $RICCATI_DATA_DIR if set, else
// the compiled-in default.
std::string default_data_dir();

// Loads the 9x9 vehicle-string reference solution (10 printed decimals per
// entry) and verifies its embedded checksums: exact symmetry, the
// alternating-sign centro-symmetry X[i][j] = (-1)^{i+j} X[n-1-i][n-1-j],
// and four anchor entries.  Throws DataFileError on any failure.
SymMatrix load_vehicle_reference(const std::string& data_dir = default_data_dir());

struct ReferenceValidation {
  double residual;  // ||X K X - A^T X - X A - Q||_F / ||Q||_F at the reference X
  bool accepted;    // residual <= 1e-6
};

// Checks a candidate drift matrix against the reference solution through
// the stationary Riccati residual.  A correct A gives a residual at
// roundoff level; a wrong one gives O(1).
ReferenceValidation validate_vehicle_reference(const Matrix& a,
                                               const std::string& data_dir = default_data_dir());

}  // namespace riccati
