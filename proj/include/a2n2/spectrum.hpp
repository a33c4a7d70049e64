#pragma once

// Dense exact diagonalization organized by Cartan weight sectors, with
// degeneracy clustering validated through invariant-subspace residuals,
// highest-weight counting per cluster, and reconciliation of the numerical
// spectrum against closed-form transfer eigenvalues and the predicted
// tensor-power decomposition.

#include <map>
#include <string>
#include <vector>

#include "a2n2/bethe.hpp"
#include "a2n2/model.hpp"
#include "a2n2/reptheory.hpp"

namespace a2n2 {

struct SpectrumCluster {
  Cx eigenvalue;                              // degenerate group mean
  long long degeneracy = 0;
  std::map<Weight2, long long> weight_histogram;  // doubled weights
  std::map<Weight2, long long> hw_weights;    // weights of highest-weight
                                              // vectors inside the cluster
  long long highest_weight_count = 0;
  double invariant_residual = 0.0;            // ||H V - V (V^+ H V)||
  Matrix basis;                               // orthonormal columns
  Cx transfer_value1, transfer_value2;        // V^+ t(probe) V diagonal mean
  double transfer_scalar_residual = 0.0;
  std::vector<int> matched;                   // indices into the solutions
};

struct SpectrumReport {
  ModelParams params;
  Algebra algebra = Algebra::Bn;
  std::vector<SpectrumCluster> clusters;      // sorted by (Re, Im)
  Decomposition observed;    // from clustering + highest weights alone
  Decomposition predicted;   // tensor_power_decompose
  std::vector<std::string> ambiguities;  // cluster pairs closer than 10x tol
  double commuting_residual = 0.0;       // [H, t(probe)] relative residual
  std::vector<int> unmatched_clusters;
  std::vector<int> unmatched_solutions;
  std::vector<std::string> errors;
  bool reconciled = false;
};

inline constexpr double kClusterTol = 1e-8;

// Groups eigenvalues of H into clusters. H must commute with every Cartan
// coproduct of the given algebra (checked first; ConfigError otherwise).
SpectrumReport sector_diagonalize(const Matrix& H, const ModelParams& p,
                                  Algebra alg);

// Matches clusters against solution transfer eigenvalues at two probe
// points and checks degeneracy == irrep dimension and observed == predicted
// multiplicities. Fills the matched/unmatched fields and `reconciled`.
void reconcile(SpectrumReport& rep, const std::vector<BetheSolution>& sols,
               Cx probe1 = Cx(0.37, 0.21), Cx probe2 = Cx(0.83, -0.41));

struct CartanCheckReport {
  bool ok = false;
  std::vector<std::string> mismatches;
};

// For every matched cluster, the highest-weight vectors must carry exactly
// the Cartan weights the solution's occupation numbers dictate.
CartanCheckReport cartan_eigen_check(const SpectrumReport& rep,
                                     const std::vector<BetheSolution>& sols);

}  // namespace a2n2
