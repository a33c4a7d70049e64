#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a2n2/chain.hpp"

using namespace a2n2;

namespace {

ModelParams params(int n, int N, BoundarySet set, Cx eta = Cx(0.0, -0.1)) {
  ModelParams p;
  p.n = n;
  p.N = N;
  p.eta = eta;
  p.set = set;
  return p;
}

double comm_residual(const Matrix& a, const Matrix& b) {
  return commutator(a, b).norm() /
         std::max({1.0, a.norm() * b.norm()});
}

}  // namespace

TEST_CASE("transfer matrices commute at distinct spectral parameters") {
  const Cx u(0.37, 0.21), v(0.83, -0.41);
  for (BoundarySet set : {BoundarySet::I, BoundarySet::II}) {
    for (auto [n, N] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
      const ModelParams p = params(n, N, set);
      CAPTURE(n);
      CAPTURE(N);
      CAPTURE(static_cast<int>(set));
      const Matrix tu = transfer_matrix(u, p);
      const Matrix tv = transfer_matrix(v, p);
      CHECK(comm_residual(tu, tv) < 1e-10);
    }
  }
}

TEST_CASE("Hamiltonian commutes with the transfer matrix") {
  const Cx u(0.53, -0.29);
  for (BoundarySet set : {BoundarySet::I, BoundarySet::II}) {
    for (auto [n, N] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
      const ModelParams p = params(n, N, set);
      CAPTURE(n);
      CAPTURE(N);
      CAPTURE(static_cast<int>(set));
      CHECK(comm_residual(hamiltonian(p), transfer_matrix(u, p)) < 1e-10);
    }
  }
}

TEST_CASE("Hamiltonian equals the normalized transfer derivative at zero") {
  for (BoundarySet set : {BoundarySet::I, BoundarySet::II}) {
    for (auto [n, N] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
      const ModelParams p = params(n, N, set);
      CAPTURE(n);
      CAPTURE(N);
      CAPTURE(static_cast<int>(set));
      const int dim = p.state_dim();
      const NormalizationConstants nc = normalization_constants(p);
      const Matrix tp =
          num_derivative([&](Cx u) { return transfer_matrix(u, p); }, 0.0);
      const Matrix h_from_t =
          tp / nc.c1 + nc.c2 * Matrix::Identity(dim, dim);
      CHECK(rel_residual(hamiltonian(p), h_from_t) < 1e-6);
    }
  }
}

TEST_CASE("two-site density respects boundary set selection") {
  const ModelParams p1 = params(2, 2, BoundarySet::I);
  CHECK_THROWS_AS((void)two_site_h_tilde(p1), ConfigError);
  const ModelParams p2 = params(2, 2, BoundarySet::II);
  const Matrix diff = two_site_h_tilde(p2) - two_site_h(p2);
  CHECK(diff.norm() > 1e-3);  // the boundary correction actually acts
  // the correction is purely diagonal
  const int d2 = p2.local_dim() * p2.local_dim();
  Matrix offdiag = diff;
  for (int i = 0; i < d2; ++i) offdiag(i, i) = 0.0;
  CHECK(offdiag.norm() < 1e-13);
}

TEST_CASE("reference state is an exact eigenvector of H") {
  // The state with every site in the first basis state diagonalizes H for
  // both boundary sets, with eigenvalue
  //   E0 = -(N-1) cosh((2n+3)eta) / (2 sinh(2 eta) cosh((2n+1)eta)).
  for (BoundarySet set : {BoundarySet::I, BoundarySet::II}) {
    for (auto [n, N] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
      const ModelParams p = params(n, N, set);
      CAPTURE(n);
      CAPTURE(N);
      CAPTURE(static_cast<int>(set));
      const Cx e0 = -(N - 1.0) * std::cosh((2.0 * n + 3.0) * p.eta) /
                    (2.0 * std::sinh(2.0 * p.eta) *
                     std::cosh((2.0 * n + 1.0) * p.eta));
      Vector ref = Vector::Zero(p.state_dim());
      ref(0) = 1.0;
      const Vector hv = hamiltonian(p) * ref;
      CHECK((hv - e0 * ref).norm() < 1e-9 * std::max(1.0, std::abs(e0)));
    }
  }
}

TEST_CASE("chain Hamiltonian is not Hermitian at imaginary eta") {
  // Both boundary sets give genuinely complex spectra here; reality is not
  // restored by the quantum group symmetry.
  const ModelParams p = params(1, 2, BoundarySet::I);
  const Matrix h = hamiltonian(p);
  CHECK((h - h.adjoint()).norm() > 1e-2);
  const EigResult er = eig(h);
  double max_im = 0.0;
  for (int i = 0; i < er.values.size(); ++i)
    max_im = std::max(max_im, std::abs(er.values(i).imag()));
  CHECK(max_im > 1.0);
}
