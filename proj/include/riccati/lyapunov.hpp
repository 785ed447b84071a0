#pragma once

#include "riccati/linalg.hpp"

namespace riccati {

// Lyapunov matrix equation  S^T X + X S = Y  with symmetric right-hand side.
// Uniquely solvable whenever sym(S) is positive definite.
struct LyapunovSystem {
  Matrix S;
  SymMatrix Y;
};

// X -> S^T X + X S, exactly symmetric by construction.
SymMatrix lyapunov_operator(const Matrix& s, const SymMatrix& x);

// Dense solve on the n(n+1)/2-dimensional symmetric subspace with basis
// E_ii and (E_ij + E_ji), i < j.  Cost O(n^6); the largest case here is
// n = 10.  Throws LyapunovSingularError when the assembled system is
// singular.
SymMatrix solve_lyapunov(const LyapunovSystem& sys);
SymMatrix solve_lyapunov(const Matrix& s, const SymMatrix& y);

}  // namespace riccati
