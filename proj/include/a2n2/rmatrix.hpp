#pragma once

// R-matrix of the fundamental A_{2n}^{(2)} trigonometric vertex model on
// V (x) V with dim V = 2n+1, its crossing data (V, M, rank-one projector),
// and the property suite used to validate the transcription: Yang-Baxter,
// PT symmetry, unitarity, regularity, crossing, and the V-sandwich
// identity V_1 R_12(u) V_1 = V_2 R_21(u) V_2.

#include <cstdint>

#include "a2n2/model.hpp"

namespace a2n2 {

// xi(u) = 2 sinh(u/2 - 2 eta) cosh(u/2 - (2n+1) eta); the unitarity scalar
// and the regularity normalization R(0) = xi(0) P.
Cx xi(Cx u, const ModelParams& p);

// alpha' = 2n + 2 - alpha (1-based).
int conj_index(int alpha, int n);

// alpha-bar: alpha + 1/2 below the middle, alpha at the middle, alpha - 1/2
// above it.
double bar_index(int alpha, int n);

Matrix r_matrix(Cx u, const ModelParams& p);

// Entrywise analytic u-derivative of the R-matrix.
Matrix r_prime(Cx u, const ModelParams& p);
Matrix r_prime_zero(const ModelParams& p);

Matrix v_matrix(const ModelParams& p);
Matrix m_matrix(const ModelParams& p);  // M = V^t V, diagonal

// Rank-one crossing projector R(-rho) / ((2n+1) xi(0)).
Matrix crossing_projector(const ModelParams& p);

struct RPropertyReport {
  double ybe = 0.0;
  double pt = 0.0;
  double unitarity = 0.0;
  double regularity = 0.0;
  double crossing = 0.0;
  double v_sandwich = 0.0;
  double max() const;
  bool pass(double tol = kIdentityTol) const { return max() < tol; }
};

// Worst relative residual of each property over `npoints` seeded random
// spectral-parameter draws with |u|, |v| <= 2.
RPropertyReport r_property_report(const ModelParams& p, int npoints = 10,
                                  std::uint64_t seed = 20240901);

}  // namespace a2n2
