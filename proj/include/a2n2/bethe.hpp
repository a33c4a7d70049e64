#pragma once

// Bethe equations for the open chain, a damped multi-start Newton solver
// with symmetry-aware deduplication, the closed-form transfer eigenvalue
// and energy, and the cardinality -> Dynkin label map.

#include <optional>
#include <random>
#include <vector>

#include "a2n2/model.hpp"
#include "a2n2/reptheory.hpp"

namespace a2n2 {

struct RootConfiguration {
  std::vector<std::vector<Cx>> levels;  // levels[l-1] holds the u_k^{(l)}

  std::vector<int> cardinalities() const;
  std::vector<Cx> flatten() const;
  static RootConfiguration unflatten(const std::vector<Cx>& flat,
                                     const std::vector<int>& m);
};

// e_k(u) = sinh(u/2 + k eta) / sinh(u/2 - k eta)
Cx e_fn(double k, Cx u, Cx eta);

// 1 for set I; the squared sinh ratio for set II
Cx chi_fn(Cx u, const ModelParams& p);

// Per-root residuals LHS/RHS - 1; nullopt if any evaluation hits a pole
// (an infeasible configuration, not an error).
std::optional<std::vector<Cx>> bethe_residual(const RootConfiguration& r,
                                              const ModelParams& p);
double bethe_residual_max(const RootConfiguration& r, const ModelParams& p);

IrrepLabel dynkin_label(const std::vector<int>& m, const ModelParams& p,
                        Algebra alg);
Weight2 cartan_weights(const std::vector<int>& m, const ModelParams& p);

// All cardinality tuples whose Dynkin labels are nonnegative.
std::vector<std::vector<int>> enumerate_admissible(const ModelParams& p,
                                                   Algebra alg);

// Closed-form transfer-matrix eigenvalue; crossed factors are evaluated by
// the substitution u -> -u-rho. Throws std::domain_error on a pole.
Cx transfer_eigenvalue(const RootConfiguration& r, Cx u,
                       const ModelParams& p);

Cx energy(const RootConfiguration& r, const ModelParams& p);

// Map into the canonical domain Re >= 0, Im in [0, 2pi) (negating first
// where needed, pure-imaginary roots folded below pi), sorted per level.
RootConfiguration canonicalize(const RootConfiguration& r);
bool same_configuration(const RootConfiguration& a, const RootConfiguration& b,
                        double tol = 1e-6);

struct BetheSolution {
  RootConfiguration roots;
  double residual = 0.0;
  IrrepLabel dynkin;
  long long dimension = 0;
  Cx energy_value = 0.0;
  Cx lambda_at_probe = 0.0;
};

struct NewtonOptions {
  int max_iter = 200;
  double tol = 1e-10;
  double fd_step = 1e-7;
  double cond_cap = 1e12;
  Cx probe = Cx(0.37, 0.21);  // where lambda_at_probe is evaluated
};

// nullopt on divergence, singular Jacobian, root collision, or pole.
std::optional<BetheSolution> newton_solve(const RootConfiguration& seed,
                                          const ModelParams& p,
                                          const NewtonOptions& opt = {});

// Eigenvalues of the dense transfer matrix at two probe points, used to
// discard spurious Newton fixed points.
struct DenseOracle {
  Cx probe1, probe2;
  Vector ev1, ev2;
};
DenseOracle build_dense_oracle(const ModelParams& p, Cx probe1, Cx probe2);

struct SearchOptions {
  int budget = 2000;  // random seeds per cardinality tuple
  unsigned long long rng_seed = 20240901;
  Cx probe1 = Cx(0.37, 0.21);
  Cx probe2 = Cx(0.83, -0.41);
  double lambda_tol = 1e-6;
  bool use_dense_oracle = true;
  const DenseOracle* oracle = nullptr;  // optional precomputed
  std::vector<RootConfiguration> extra_seeds;
};

struct SearchReport {
  std::vector<int> m;
  std::vector<BetheSolution> solutions;  // sorted by |energy|
  long long expected = -1;  // decomposition multiplicity; -1 if uncomputed
};

SearchReport completeness_search(const std::vector<int>& m,
                                 const ModelParams& p,
                                 const SearchOptions& opt = {});

// Incremental seeds for sector m built from solutions of smaller sectors:
// every bank entry whose cardinalities fit inside m (missing at most three
// roots) is extended per_parent times with correlated axis-aligned fills,
// and levelwise unions of two bank entries are tried as well.  Pure random
// starts rarely reach the large sectors because their basins shrink with
// the root count; extending known smaller solutions does.
std::vector<RootConfiguration> cascade_seeds(
    const std::vector<int>& m, const std::vector<BetheSolution>& bank,
    int per_parent, std::mt19937_64& rng);

}  // namespace a2n2
