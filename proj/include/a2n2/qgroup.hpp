#pragma once

// Quantum group generators for U_q(B_n) and U_q(C_n) acting on the
// (2n+1)-dimensional site space, their two-site coproducts, and N-fold
// extensions. The C_n raising/lowering pair attached to the short root has
// no closed-form coproduct; it is produced through a commutator ladder
// seeded by the extra generators E_0^+- = e_{1,2n+1}, e_{2n+1,1}.

#include <vector>

#include "a2n2/model.hpp"

namespace a2n2 {

struct GeneratorSet {
  Algebra algebra = Algebra::Bn;
  int n = 1;
  std::vector<Matrix> cartan;    // H_1..H_n, diagonal, entries in {-1,0,1}
  std::vector<Matrix> raising;   // E_1^+..E_n^+
  std::vector<Matrix> lowering;  // E_1^-..E_n^-  (transposes of the raisings)
  Matrix extra_raising;          // E_0^+ (C_n only; empty for B_n)
  Matrix extra_lowering;         // E_0^- (C_n only; empty for B_n)
};

struct CoproductSet {
  int site_count = 2;
  Algebra algebra = Algebra::Bn;
  std::vector<Matrix> cartanN;
  std::vector<Matrix> raisingN;
  std::vector<Matrix> loweringN;
  Matrix extra_raisingN;  // C_n only
  Matrix extra_loweringN;
};

GeneratorSet bn_generators(const ModelParams& p);
GeneratorSet cn_generators(const ModelParams& p);

// Root vectors alpha^{(j)} in the orthogonal basis, as used by the exact
// commutation relations [H_i, E_j^+-] = +- alpha_i^{(j)} E_j^+-.
std::vector<std::vector<int>> simple_roots(Algebra alg, int n);

CoproductSet coproduct_two_site(const GeneratorSet& g, const ModelParams& p);
CoproductSet nfold_coproduct(const GeneratorSet& g, const ModelParams& p,
                             int N);

// Max relative residual of the quadratic exchange relations between the
// two-site coproducts (the B_n form with the sign operator Omega_{ij}, or
// the three C_n identities).
double qrelation_residual(const GeneratorSet& g, const ModelParams& p);

// Max over generators of the three-site mismatch between the two nestings
// (Delta x id)Delta and (id x Delta)Delta.
double coassociativity_residual(const GeneratorSet& g, const ModelParams& p);

// Max over all generators X of ||[Delta_(N)(X), H]|| / max(1, ||X|| ||H||).
double symmetry_residual(const CoproductSet& cop, const Matrix& h);

// Dimension of the joint kernel of all Delta_(N)(E_i^+) restricted to the
// span of the given vectors (SVD rank with a relative threshold).
int highest_weight_count(const CoproductSet& cop,
                         const std::vector<Vector>& eigenspace);

}  // namespace a2n2
