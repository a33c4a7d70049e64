#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a2n2/kmatrix.hpp"

using namespace a2n2;

namespace {

ModelParams params(int n, BoundarySet set, Cx eta = Cx(0.0, -0.1)) {
  ModelParams p;
  p.n = n;
  p.N = 2;
  p.eta = eta;
  p.set = set;
  return p;
}

const Cx kPts[] = {Cx(0.37, 0.21), Cx(-0.8, 0.45), Cx(1.1, -0.6)};

}  // namespace

TEST_CASE("K^- regularity and boundary data") {
  for (int n : {1, 2, 3}) {
    for (BoundarySet set : {BoundarySet::I, BoundarySet::II}) {
      const ModelParams p = params(n, set);
      const BoundaryData b = boundary_data(p);
      const int d = p.local_dim();
      CHECK(rel_residual(k_minus(0.0, p), b.kappa * Matrix::Identity(d, d)) <
            1e-13);
      if (set == BoundarySet::II) {
        const Cx kappa =
            Cx(0, 1) * std::cosh(p.eta) - std::sinh(2.0 * n * p.eta);
        CHECK(std::abs(b.kappa - kappa) < 1e-14);
      } else {
        CHECK(std::abs(b.kappa - 1.0) < 1e-15);
      }
    }
  }
}

TEST_CASE("k_plus reduces to M for set I") {
  for (int n : {1, 2}) {
    const ModelParams p = params(n, BoundarySet::I);
    for (Cx u : kPts) CHECK(rel_residual(k_plus(u, p), m_matrix(p)) < 1e-12);
  }
}

TEST_CASE("BYBE holds for both sets") {
  for (int n : {1, 2, 3}) {
    for (BoundarySet set : {BoundarySet::I, BoundarySet::II}) {
      const ModelParams p = params(n, set);
      CAPTURE(n);
      CAPTURE(static_cast<int>(set));
      CHECK(bybe_residual(kPts[0], kPts[1], p) < 1e-9);
      CHECK(bybe_residual(kPts[2], kPts[0], p) < 1e-9);
    }
  }
}

TEST_CASE("dual BYBE holds for both sets") {
  for (int n : {1, 2}) {
    for (BoundarySet set : {BoundarySet::I, BoundarySet::II}) {
      const ModelParams p = params(n, set);
      CHECK(dual_bybe_residual(kPts[0], kPts[1], p) < 1e-9);
    }
  }
}

TEST_CASE("analytic K^- derivative matches the numerical one") {
  for (int n : {1, 2, 3}) {
    const ModelParams p = params(n, BoundarySet::II);
    auto f = [&](Cx u) { return k_minus(u, p); };
    for (Cx u : {Cx(0.0, 0.0), kPts[0], kPts[1]}) {
      CHECK(rel_residual(k_minus_prime(u, p), num_derivative(f, u)) < 1e-9);
    }
    // closed-form diagonal of K^{-'}(0)
    const BoundaryData b = boundary_data(p);
    const Matrix kp = k_minus_prime(0.0, p);
    const Cx c2n = std::cosh(2.0 * n * p.eta);
    CHECK(std::abs(kp(0, 0) - (-b.kappa + c2n)) < 1e-13);
    CHECK(std::abs(kp(n, n) - Cx(0, 1) * std::sinh(p.eta)) < 1e-13);
    CHECK(std::abs(kp(2 * n, 2 * n) - (b.kappa + c2n)) < 1e-13);
  }
}

TEST_CASE("boundary identity fit") {
  for (int n : {1, 2, 3}) {
    for (BoundarySet set : {BoundarySet::I, BoundarySet::II}) {
      const ModelParams p = params(n, set);
      CAPTURE(n);
      CAPTURE(static_cast<int>(set));
      for (Cx u : kPts) {
        const BoundaryFit fit = boundary_identity_fit(u, p);
        CHECK(fit.residual < 1e-9);
      }
      // f(0) = xi(0) tr K^+(0) / kappa
      const BoundaryFit at0 = boundary_identity_fit(0.0, p);
      const Cx expect =
          xi(0.0, p) * k_plus(0.0, p).trace() / boundary_data(p).kappa;
      CHECK(std::abs(at0.f - expect) / std::abs(expect) < 1e-10);
    }
  }
}

TEST_CASE("V sandwich identity for K^{-'}(0)") {
  for (int n : {1, 2, 3}) {
    CHECK(v_sandwich_residual(params(n, BoundarySet::II)) < 1e-12);
    CHECK(v_sandwich_residual(params(n, BoundarySet::I)) < 1e-15);
  }
}
