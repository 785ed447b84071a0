#pragma once

#include "riccati/scheme.hpp"

namespace riccati {

// Explicit reference integrators used to contrast against the implicit
// scheme; both lose positivity (or blow up) on stiff problems.
enum class ExplicitScheme { forward_euler, rk2_midpoint };

// Right-hand side F(X) = (X A + A^T X) - X K X + Q, symmetrized to kill
// roundoff asymmetry.
SymMatrix riccati_rhs(const RiccatiProblem& prob, const SymMatrix& x);

struct ExplicitStepResult {
  SymMatrix X;
  bool diverged;  // ||X||_F above 1e12 (1 + ||Q||_F), or non-finite
};

ExplicitStepResult explicit_step(ExplicitScheme scheme, const RiccatiProblem& prob,
                                 const SymMatrix& x, double dt);

// Fixed-step explicit run; stops early with RunStatus::diverged when the
// overflow guard trips.
Trajectory explicit_integrate(ExplicitScheme scheme, const RiccatiProblem& prob, double dt,
                              std::size_t steps, const std::string& label = "");

const char* to_string(ExplicitScheme s);

}  // namespace riccati
