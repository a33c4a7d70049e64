#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "a2n2/rmatrix.hpp"

using namespace a2n2;

namespace {

ModelParams params(int n, Cx eta) {
  ModelParams p;
  p.n = n;
  p.N = 2;
  p.eta = eta;
  return p;
}

const Cx kEtaRef = Cx(0.0, -0.1);

}  // namespace

TEST_CASE("xi closed forms") {
  for (int n : {1, 2, 3}) {
    const ModelParams p = params(n, kEtaRef);
    // xi(0) = -2 sinh(2 eta) cosh((2n+1) eta)
    const Cx expect =
        -2.0 * std::sinh(2.0 * p.eta) * std::cosh((2.0 * n + 1.0) * p.eta);
    CHECK(std::abs(xi(0.0, p) - expect) < 1e-14);
  }
}

TEST_CASE("index helpers") {
  CHECK(conj_index(1, 1) == 3);
  CHECK(conj_index(2, 1) == 2);
  CHECK(conj_index(1, 3) == 7);
  CHECK(conj_index(4, 3) == 4);
  CHECK(bar_index(1, 1) == doctest::Approx(1.5));
  CHECK(bar_index(2, 1) == doctest::Approx(2.0));
  CHECK(bar_index(3, 1) == doctest::Approx(2.5));
  CHECK(bar_index(5, 2) == doctest::Approx(4.5));
}

TEST_CASE("property suite passes for n = 1, 2, 3 at the reference eta") {
  for (int n : {1, 2, 3}) {
    CAPTURE(n);
    const RPropertyReport rep = r_property_report(params(n, kEtaRef), 10, 7);
    CAPTURE(rep.ybe);
    CAPTURE(rep.pt);
    CAPTURE(rep.unitarity);
    CAPTURE(rep.regularity);
    CAPTURE(rep.crossing);
    CAPTURE(rep.v_sandwich);
    CHECK(rep.pass(1e-9));
  }
}

TEST_CASE("property suite passes for a generic complex eta") {
  const RPropertyReport rep =
      r_property_report(params(2, Cx(0.17, 0.23)), 6, 99);
  CHECK(rep.pass(1e-9));
}

TEST_CASE("regularity pins the normalization") {
  const ModelParams p = params(2, kEtaRef);
  const int d = p.local_dim();
  CHECK(rel_residual(r_matrix(0.0, p), xi(0.0, p) * permutation_op(d)) <
        1e-12);
}

TEST_CASE("analytic derivative agrees with the numerical one") {
  for (int n : {1, 2}) {
    const ModelParams p = params(n, kEtaRef);
    auto f = [&](Cx u) { return r_matrix(u, p); };
    CHECK(rel_residual(r_prime_zero(p), num_derivative(f, 0.0)) < 1e-8);
    for (const Cx u : {Cx(0.4, 0.3), Cx(-0.6, 0.9)}) {
      CHECK(rel_residual(r_prime(u, p), num_derivative(f, u)) < 1e-8);
    }
  }
}

TEST_CASE("derivative of the b coefficient at zero") {
  for (int n : {1, 2, 3}) {
    const ModelParams p = params(n, kEtaRef);
    const int d = p.local_dim();
    const int row = 0 * d + 1;  // entry family b at (12,12)
    const Cx got = r_prime_zero(p)(row, row);
    CHECK(std::abs(got - std::cosh((2.0 * n + 1.0) * p.eta)) < 1e-13);
  }
}

TEST_CASE("V squares to the identity and M = V^t V matches the closed form") {
  for (int n : {1, 2, 3}) {
    const ModelParams p = params(n, kEtaRef);
    const int d = p.local_dim();
    const Matrix V = v_matrix(p);
    CHECK(rel_residual(V * V, Matrix::Identity(d, d)) < 1e-13);
    CHECK(rel_residual(V.transpose() * V, m_matrix(p)) < 1e-13);
  }
  // n = 1 closed form: M = diag(e^{2 eta}, 1, e^{-2 eta})
  const ModelParams p1 = params(1, kEtaRef);
  const Matrix M = m_matrix(p1);
  CHECK(std::abs(M(0, 0) - std::exp(2.0 * p1.eta)) < 1e-14);
  CHECK(std::abs(M(1, 1) - 1.0) < 1e-14);
  CHECK(std::abs(M(2, 2) - std::exp(-2.0 * p1.eta)) < 1e-14);
}

TEST_CASE("crossing projector is rank one, idempotent, and sandwiches") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int n : {1, 2}) {
    const ModelParams p = params(n, kEtaRef);
    const int d = p.local_dim();
    const Matrix proj = crossing_projector(p);
    CHECK(rel_residual(proj * proj, proj) < 1e-10);
    CHECK(std::abs(proj.trace() - 1.0) < 1e-10);
    Eigen::JacobiSVD<Matrix> svd(proj);
    CHECK(svd.singularValues()(1) / svd.singularValues()(0) < 1e-10);

    // alternate form (1/(2n+1)) V_1 P^{t_2} V_1
    const Matrix V1 = kron(v_matrix(p), Matrix::Identity(d, d));
    const Matrix alt =
        V1 * partial_transpose(permutation_op(d), d, d, 2) * V1 /
        (2.0 * n + 1.0);
    CHECK(rel_residual(proj, alt) < 1e-12);

    // sandwich rule with a random A
    Matrix A(d * d, d * d);
    for (int i = 0; i < d * d; ++i)
      for (int j = 0; j < d * d; ++j) A(i, j) = Cx(dist(rng), dist(rng));
    const Matrix lhs = proj * A * proj;
    const Matrix rhs = (proj * A).trace() * proj;
    CHECK(rel_residual(lhs, rhs) < 1e-10);

    // swapped projector equals the full transpose and differs from proj
    const Matrix P = permutation_op(d);
    CHECK(rel_residual(P * proj * P, proj.transpose().eval()) < 1e-12);
    CHECK((P * proj * P - proj).norm() > 1e-2);
  }
}

TEST_CASE("parameter validation") {
  ModelParams bad;
  bad.n = 0;
  CHECK_THROWS_AS(r_matrix(0.0, bad), ConfigError);
  ModelParams bad2;
  bad2.N = 0;
  CHECK_THROWS_AS(bad2.validate(), ConfigError);
}
