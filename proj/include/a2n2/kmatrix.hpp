#pragma once

// Boundary K-matrices for the two integrable boundary sets, boundary
// Yang-Baxter residuals, and the boundary identity
//   tr_1 K_1^+(u) P_12 R_21(2u) = f(u) V K^{-t}(u) V
// used to reduce the Hamiltonian to two-body form.

#include "a2n2/rmatrix.hpp"

namespace a2n2 {

struct BoundaryData {
  BoundarySet set;
  Cx kappa;  // K^-(0) = kappa I
  Cx mu;     // V K^{-'}(0) V = -K^{-'}(0) + mu U + nu I  (zero for set I)
  Cx nu;
  Matrix U;  // e_{n+1, n+1}
};

BoundaryData boundary_data(const ModelParams& p);

Matrix k_minus(Cx u, const ModelParams& p);
Matrix k_minus_prime(Cx u, const ModelParams& p);  // analytic derivative
Matrix k_plus(Cx u, const ModelParams& p);         // K^{-t}(-u-rho) M

// Relative Frobenius residual of the boundary Yang-Baxter equation at (u,v).
double bybe_residual(Cx u, Cx v, const ModelParams& p);

// Relative residual of the dual boundary Yang-Baxter equation for K^+.
double dual_bybe_residual(Cx u, Cx v, const ModelParams& p);

struct BoundaryFit {
  Cx f;            // fitted scalar factor
  double residual; // || LHS - f RHS || / || LHS ||
};

BoundaryFit boundary_identity_fit(Cx u, const ModelParams& p);

// Residual of V K^{-'}(0) V = -K^{-'}(0) + mu U + nu I.
double v_sandwich_residual(const ModelParams& p);

}  // namespace a2n2
