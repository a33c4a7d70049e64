#pragma once

// Two-site Hamiltonians, the open-chain Hamiltonians for both boundary
// sets, the Sklyanin double-row transfer matrix, and the constants tying
// H to t'(0).

#include "a2n2/kmatrix.hpp"

namespace a2n2 {

// h = P R'(0) / xi(0) on V (x) V.
Matrix two_site_h(const ModelParams& p);

// h-tilde = h + (1/2 kappa) (K^{-'}(0) (x) I - I (x) K^{-'}(0));
// defined for set II only.
Matrix two_site_h_tilde(const ModelParams& p);

// Set I:  sum_k h_{k,k+1}.
// Set II: sum_k h-tilde_{k,k+1} + (mu / 2 kappa) U_N.
Matrix hamiltonian(const ModelParams& p);

// Double-row transfer matrix t(u) = tr_a K_a^+ T_a K_a^- T-hat_a assembled
// by multiplying embedded factors on the (N+1)-slot space; the auxiliary
// slot is last (fastest index).
Matrix transfer_matrix(Cx u, const ModelParams& p);

struct NormalizationConstants {
  Cx c1, c2;  // H = t'(0)/c1 + c2 I
};

NormalizationConstants normalization_constants(const ModelParams& p);

}  // namespace a2n2
