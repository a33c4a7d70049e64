#include "a2n2/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "a2n2/chain.hpp"
#include "a2n2/qgroup.hpp"

namespace a2n2 {

namespace {

constexpr double kRankTol = 1e-7;  // relative SVD threshold for kernels

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool close_eigin(Cx a, Cx b) {
  return std::abs(a - b) <
         kClusterTol * std::max({1.0, std::abs(a), std::abs(b)});
}

double comm_residual(const Matrix& a, const Matrix& b) {
  return (a * b - b * a).norm() / std::max(1.0, a.norm() * b.norm());
}

// one eigenvalue group inside one weight sector
struct LocalCluster {
  Cx lambda;
  Weight2 weight;
  Matrix basis;  // full-dimension embedding, orthonormal columns
};

// kernel dimension of the stacked raising maps restricted to span(cols)
long long kernel_dim(const std::vector<Matrix>& raisings, const Matrix& q) {
  if (q.cols() == 0) return 0;
  Matrix stacked(raisings.size() * q.rows(), q.cols());
  for (size_t r = 0; r < raisings.size(); ++r)
    stacked.middleRows(r * q.rows(), q.rows()) = raisings[r] * q;
  Eigen::JacobiSVD<Matrix> svd(stacked);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) < 1e-12) return q.cols();
  long long rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > kRankTol * s(0)) ++rank;
  return q.cols() - rank;
}

}  // namespace

SpectrumReport sector_diagonalize(const Matrix& H, const ModelParams& p,
                                  Algebra alg) {
  p.validate();
  const int D = p.state_dim();
  if (H.rows() != D || H.cols() != D)
    throw ConfigError("sector_diagonalize: operator size does not match");
  if (D > kEigDimCap)
    throw ResourceCapError("sector_diagonalize: state space too large");

  SpectrumReport rep;
  rep.params = p;
  rep.algebra = alg;

  const GeneratorSet g =
      alg == Algebra::Bn ? bn_generators(p) : cn_generators(p);
  const CoproductSet cop = nfold_coproduct(g, p, p.N);
  for (const Matrix& hc : cop.cartanN)
    if (comm_residual(H, hc) > 1e-8)
      throw ConfigError(
          "sector_diagonalize: H does not commute with the Cartan "
          "subalgebra of the requested symmetry");
  // the Cartans alone cannot tell the two families apart, so also check
  // the simple raising operators before trusting the declared symmetry
  for (const Matrix& ec : cop.raisingN)
    if (comm_residual(H, ec) > 1e-8)
      throw ConfigError(
          "sector_diagonalize: H does not commute with the raising "
          "operators of the requested symmetry");

  // doubled weight vector of every basis state, read off the diagonals
  std::vector<Weight2> state_weight(D, Weight2(p.n));
  for (int i = 0; i < p.n; ++i) {
    for (int s = 0; s < D; ++s) {
      const Cx v = cop.cartanN[i](s, s);
      const double r = std::round(v.real());
      if (std::abs(v.imag()) > 1e-9 || std::abs(v.real() - r) > 1e-9)
        throw ConfigError("sector_diagonalize: non-integer Cartan weight");
      state_weight[s][i] = 2 * static_cast<int>(r);
    }
  }
  std::map<Weight2, std::vector<int>> sectors;
  for (int s = 0; s < D; ++s) sectors[state_weight[s]].push_back(s);

  // diagonalize each sector and split it into eigenvalue groups
  std::vector<LocalCluster> locals;
  for (const auto& [w, idx] : sectors) {
    const int ns = static_cast<int>(idx.size());
    Matrix hs(ns, ns);
    for (int a = 0; a < ns; ++a)
      for (int b = 0; b < ns; ++b) hs(a, b) = H(idx[a], idx[b]);
    Eigen::ComplexEigenSolver<Matrix> es(hs, false);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("sector_diagonalize: eigensolver failed");
    const Vector vals = es.eigenvalues();

    Dsu dsu(ns);
    for (int a = 0; a < ns; ++a)
      for (int b = a + 1; b < ns; ++b)
        if (close_eigin(vals(a), vals(b))) dsu.unite(a, b);
    std::map<int, std::vector<int>> groups;
    for (int a = 0; a < ns; ++a) groups[dsu.find(a)].push_back(a);

    for (const auto& [root, members] : groups) {
      Cx mean = 0.0;
      for (int a : members) mean += vals(a);
      mean /= static_cast<double>(members.size());

      // spectral projector onto the group (H restricted to a sector is
      // diagonalizable, so one linear factor removes each other group)
      Matrix proj = Matrix::Identity(ns, ns);
      for (const auto& [oroot, omembers] : groups) {
        if (oroot == root) continue;
        Cx omean = 0.0;
        for (int a : omembers) omean += vals(a);
        omean /= static_cast<double>(omembers.size());
        proj = (hs - omean * Matrix::Identity(ns, ns)) * proj /
               (mean - omean);
      }
      Eigen::JacobiSVD<Matrix> svd(proj, Eigen::ComputeThinU);
      const auto& s = svd.singularValues();
      const int k = static_cast<int>(members.size());
      int rank = 0;
      for (int i = 0; i < s.size(); ++i)
        if (s(i) > kRankTol * s(0)) ++rank;
      if (rank != k) {
        std::ostringstream os;
        os << "projector rank " << rank << " for a group of " << k
           << " eigenvalues near (" << mean.real() << "," << mean.imag()
           << ")";
        rep.errors.push_back(os.str());
      }
      LocalCluster lc;
      lc.lambda = mean;
      lc.weight = w;
      lc.basis = Matrix::Zero(D, k);
      for (int c = 0; c < k; ++c)
        for (int a = 0; a < ns; ++a) lc.basis(idx[a], c) = svd.matrixU()(a, c);
      locals.push_back(std::move(lc));
    }
  }

  // merge eigenvalue groups across sectors
  const int L = static_cast<int>(locals.size());
  Dsu dsu(L);
  for (int a = 0; a < L; ++a)
    for (int b = a + 1; b < L; ++b)
      if (close_eigin(locals[a].lambda, locals[b].lambda)) dsu.unite(a, b);
  std::map<int, std::vector<int>> merged;
  for (int a = 0; a < L; ++a) merged[dsu.find(a)].push_back(a);

  for (const auto& [root, members] : merged) {
    SpectrumCluster c;
    long long total = 0;
    Cx mean = 0.0;
    for (int a : members) {
      const long long k = locals[a].basis.cols();
      c.weight_histogram[locals[a].weight] += k;
      mean += locals[a].lambda * static_cast<double>(k);
      total += k;
    }
    c.eigenvalue = mean / static_cast<double>(total);
    c.degeneracy = total;
    c.basis = Matrix(D, total);
    long long col = 0;
    for (int a : members) {
      c.basis.middleCols(col, locals[a].basis.cols()) = locals[a].basis;
      col += locals[a].basis.cols();
    }
    const Matrix small = c.basis.adjoint() * H * c.basis;
    c.invariant_residual = (H * c.basis - c.basis * small).norm();

    // highest-weight vectors, resolved per weight
    for (int a : members) {
      const long long k = kernel_dim(cop.raisingN, locals[a].basis);
      if (k > 0) c.hw_weights[locals[a].weight] += k;
    }
    for (const auto& [w, k] : c.hw_weights) {
      c.highest_weight_count += k;
      try {
        rep.observed.entries[weight_to_label(w, alg)] += k;
      } catch (const ConfigError&) {
        std::ostringstream os;
        os << "highest-weight vector at a non-dominant weight in the "
              "cluster near ("
           << c.eigenvalue.real() << "," << c.eigenvalue.imag() << ")";
        rep.errors.push_back(os.str());
      }
    }
    rep.clusters.push_back(std::move(c));
  }

  std::sort(rep.clusters.begin(), rep.clusters.end(),
            [](const SpectrumCluster& a, const SpectrumCluster& b) {
              if (a.eigenvalue.real() != b.eigenvalue.real())
                return a.eigenvalue.real() < b.eigenvalue.real();
              return a.eigenvalue.imag() < b.eigenvalue.imag();
            });

  for (size_t a = 0; a < rep.clusters.size(); ++a) {
    for (size_t b = a + 1; b < rep.clusters.size(); ++b) {
      const Cx la = rep.clusters[a].eigenvalue;
      const Cx lb = rep.clusters[b].eigenvalue;
      const double thr =
          10.0 * kClusterTol * std::max({1.0, std::abs(la), std::abs(lb)});
      if (std::abs(la - lb) < thr) {
        std::ostringstream os;
        os << "clusters " << a << " and " << b << " separated by only "
           << std::abs(la - lb);
        rep.ambiguities.push_back(os.str());
      }
    }
  }

  rep.predicted = tensor_power_decompose(p, alg);
  return rep;
}

void reconcile(SpectrumReport& rep, const std::vector<BetheSolution>& sols,
               Cx probe1, Cx probe2) {
  const ModelParams& p = rep.params;
  const Matrix H = hamiltonian(p);
  const Matrix t1 = transfer_matrix(probe1, p);
  const Matrix t2 = transfer_matrix(probe2, p);
  rep.commuting_residual =
      std::max(comm_residual(H, t1), comm_residual(H, t2));
  if (rep.commuting_residual > 1e-8)
    rep.errors.push_back("[H, t(u)] residual above tolerance");

  for (SpectrumCluster& c : rep.clusters) {
    const Matrix m1 = c.basis.adjoint() * (t1 * c.basis);
    const Matrix m2 = c.basis.adjoint() * (t2 * c.basis);
    const double k = static_cast<double>(c.degeneracy);
    c.transfer_value1 = m1.trace() / k;
    c.transfer_value2 = m2.trace() / k;
    const double r1 =
        (m1 - c.transfer_value1 * Matrix::Identity(m1.rows(), m1.cols()))
            .norm() /
        std::max(1.0, std::abs(c.transfer_value1));
    const double r2 =
        (m2 - c.transfer_value2 * Matrix::Identity(m2.rows(), m2.cols()))
            .norm() /
        std::max(1.0, std::abs(c.transfer_value2));
    c.transfer_scalar_residual = std::max(r1, r2);
    c.matched.clear();
  }

  for (size_t si = 0; si < sols.size(); ++si) {
    Cx l1, l2;
    try {
      l1 = transfer_eigenvalue(sols[si].roots, probe1, p);
      l2 = transfer_eigenvalue(sols[si].roots, probe2, p);
    } catch (const std::domain_error&) {
      rep.errors.push_back("solution hit a pole at a probe point");
      continue;
    }
    int hits = 0;
    for (SpectrumCluster& c : rep.clusters) {
      const bool ok1 = std::abs(l1 - c.transfer_value1) <
                       1e-6 * std::max(1.0, std::abs(c.transfer_value1));
      const bool ok2 = std::abs(l2 - c.transfer_value2) <
                       1e-6 * std::max(1.0, std::abs(c.transfer_value2));
      if (ok1 && ok2) {
        c.matched.push_back(static_cast<int>(si));
        ++hits;
      }
    }
    if (hits == 0) rep.unmatched_solutions.push_back(static_cast<int>(si));
    if (hits > 1) {
      std::ostringstream os;
      os << "solution " << si << " matches " << hits << " clusters";
      rep.errors.push_back(os.str());
    }
  }

  rep.unmatched_clusters.clear();
  for (size_t ci = 0; ci < rep.clusters.size(); ++ci) {
    const SpectrumCluster& c = rep.clusters[ci];
    if (c.matched.empty()) {
      rep.unmatched_clusters.push_back(static_cast<int>(ci));
      continue;
    }
    long long dim_sum = 0;
    for (int si : c.matched) dim_sum += sols[si].dimension;
    if (dim_sum != c.degeneracy) {
      std::ostringstream os;
      os << "cluster " << ci << " degeneracy " << c.degeneracy
         << " differs from matched irrep dimension " << dim_sum;
      rep.errors.push_back(os.str());
    }
    if (c.highest_weight_count != static_cast<long long>(c.matched.size())) {
      std::ostringstream os;
      os << "cluster " << ci << " holds " << c.highest_weight_count
         << " highest-weight vectors but matched " << c.matched.size()
         << " solutions";
      rep.errors.push_back(os.str());
    }
  }

  if (!(rep.observed.entries == rep.predicted.entries))
    rep.errors.push_back(
        "observed decomposition differs from the predicted one");

  rep.reconciled = rep.errors.empty() && rep.unmatched_clusters.empty() &&
                   rep.unmatched_solutions.empty();
}

CartanCheckReport cartan_eigen_check(const SpectrumReport& rep,
                                     const std::vector<BetheSolution>& sols) {
  CartanCheckReport out;
  for (size_t ci = 0; ci < rep.clusters.size(); ++ci) {
    const SpectrumCluster& c = rep.clusters[ci];
    if (c.matched.empty()) continue;
    std::map<Weight2, long long> want;
    for (int si : c.matched)
      want[cartan_weights(sols[si].roots.cardinalities(), rep.params)] += 1;
    if (!(want == c.hw_weights)) {
      std::ostringstream os;
      os << "cluster " << ci
         << ": highest-weight Cartan eigenvalues disagree with the "
            "occupation numbers";
      out.mismatches.push_back(os.str());
    }
  }
  out.ok = out.mismatches.empty();
  return out;
}

}  // namespace a2n2
