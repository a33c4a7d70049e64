#pragma once

// Model parameters for the open A_{2n}^{(2)} chain and the two boundary
// condition sets, together with the derived crossing parameter.

#include <numbers>
#include <string>

#include "a2n2/linalg.hpp"

namespace a2n2 {

inline constexpr double kPi = std::numbers::pi;

enum class BoundarySet { I, II };
enum class Algebra { Bn, Cn };

// Set I is U_q(B_n)-invariant, set II is U_q(C_n)-invariant.
Algebra algebra_for(BoundarySet set);

std::string to_string(BoundarySet set);
std::string to_string(Algebra alg);
BoundarySet boundary_set_from_string(const std::string& s);

struct ModelParams {
  int n = 1;                    // rank; local dimension is 2n+1
  int N = 2;                    // number of chain sites
  Cx eta = Cx(0.0, -0.1);       // anisotropy
  BoundarySet set = BoundarySet::I;

  int local_dim() const { return 2 * n + 1; }
  int state_dim() const {
    int dim = 1;
    for (int k = 0; k < N; ++k) dim *= local_dim();
    return dim;
  }
  Cx rho() const { return Cx(0.0, -kPi) - 2.0 * (2.0 * n + 1.0) * eta; }
  Cx q() const { return std::exp(2.0 * eta); }

  void validate() const {
    if (n < 1) throw ConfigError("ModelParams: n must be >= 1");
    if (N < 1) throw ConfigError("ModelParams: N must be >= 1");
  }
};

}  // namespace a2n2
