#include "a2n2/kmatrix.hpp"

namespace a2n2 {

namespace {
const Cx kI(0.0, 1.0);
}

BoundaryData boundary_data(const ModelParams& p) {
  p.validate();
  const int n = p.n;
  BoundaryData b;
  b.set = p.set;
  b.U = elementary(p.local_dim(), n + 1, n + 1);
  if (p.set == BoundarySet::I) {
    b.kappa = 1.0;
    b.mu = 0.0;
    b.nu = 0.0;
    return b;
  }
  b.kappa = kI * std::cosh(p.eta) - std::sinh(2.0 * n * p.eta);
  b.mu = 2.0 * (kI * std::sinh(p.eta) - std::cosh(2.0 * n * p.eta));
  b.nu = 2.0 * std::cosh(2.0 * n * p.eta);
  return b;
}

Matrix k_minus(Cx u, const ModelParams& p) {
  p.validate();
  const int d = p.local_dim();
  if (p.set == BoundarySet::I) return Matrix::Identity(d, d);
  const int n = p.n;
  const Cx eta = p.eta;
  Matrix k = Matrix::Zero(d, d);
  for (int j = 1; j <= d; ++j) {
    Cx v;
    if (j <= n)
      v = std::exp(-u) * (kI * std::cosh(eta) + std::sinh(u - 2.0 * n * eta));
    else if (j == n + 1)
      v = kI * std::cosh(u + eta) - std::sinh(2.0 * n * eta);
    else
      v = std::exp(u) * (kI * std::cosh(eta) + std::sinh(u - 2.0 * n * eta));
    k(j - 1, j - 1) = v;
  }
  return k;
}

Matrix k_minus_prime(Cx u, const ModelParams& p) {
  p.validate();
  const int d = p.local_dim();
  if (p.set == BoundarySet::I) return Matrix::Zero(d, d);
  const int n = p.n;
  const Cx eta = p.eta;
  Matrix k = Matrix::Zero(d, d);
  for (int j = 1; j <= d; ++j) {
    Cx v;
    if (j <= n)
      v = std::exp(-u) * (-(kI * std::cosh(eta) + std::sinh(u - 2.0 * n * eta)) +
                          std::cosh(u - 2.0 * n * eta));
    else if (j == n + 1)
      v = kI * std::sinh(u + eta);
    else
      v = std::exp(u) * ((kI * std::cosh(eta) + std::sinh(u - 2.0 * n * eta)) +
                         std::cosh(u - 2.0 * n * eta));
    k(j - 1, j - 1) = v;
  }
  return k;
}

Matrix k_plus(Cx u, const ModelParams& p) {
  return k_minus(-u - p.rho(), p).transpose() * m_matrix(p);
}

double bybe_residual(Cx u, Cx v, const ModelParams& p) {
  const int d = p.local_dim();
  const Matrix Id = Matrix::Identity(d, d);
  const Matrix P = permutation_op(d);
  auto R = [&](Cx z) { return r_matrix(z, p); };
  auto R21 = [&](Cx z) { return (P * r_matrix(z, p) * P).eval(); };
  const Matrix K1 = kron(k_minus(u, p), Id);
  const Matrix K2 = kron(Id, k_minus(v, p));
  const Matrix lhs = R(u - v) * K1 * R21(u + v) * K2;
  const Matrix rhs = K2 * R(u + v) * K1 * R21(u - v);
  return rel_residual(lhs, rhs);
}

double dual_bybe_residual(Cx u, Cx v, const ModelParams& p) {
  const int d = p.local_dim();
  const Matrix Id = Matrix::Identity(d, d);
  const Matrix P = permutation_op(d);
  const Cx rho = p.rho();
  auto R = [&](Cx z) { return r_matrix(z, p); };
  auto R21 = [&](Cx z) { return (P * r_matrix(z, p) * P).eval(); };
  const Matrix M = m_matrix(p);
  const Matrix M1 = kron(M, Id);
  const Matrix M1inv = kron(M.inverse().eval(), Id);
  const Matrix K1 = kron(k_plus(u, p).transpose().eval(), Id);
  const Matrix K2 = kron(Id, k_plus(v, p).transpose().eval());
  const Matrix lhs =
      R(-u + v) * K1 * M1inv * R21(-u - v - 2.0 * rho) * M1 * K2;
  const Matrix rhs =
      K2 * M1 * R(-u - v - 2.0 * rho) * M1inv * K1 * R21(-u + v);
  return rel_residual(lhs, rhs);
}

BoundaryFit boundary_identity_fit(Cx u, const ModelParams& p) {
  const int d = p.local_dim();
  const Matrix Id = Matrix::Identity(d, d);
  const Matrix P = permutation_op(d);
  const Matrix R21 = P * r_matrix(2.0 * u, p) * P;
  const Matrix lhs =
      partial_trace(kron(k_plus(u, p), Id) * P * R21, d, d, 1);
  const Matrix V = v_matrix(p);
  const Matrix rhs = V * k_minus(u, p).transpose() * V;

  // fit the scalar on the largest-magnitude entry of the right-hand side
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (std::abs(rhs(i, j)) > best) {
        best = std::abs(rhs(i, j));
        bi = i;
        bj = j;
      }
  BoundaryFit fit;
  fit.f = lhs(bi, bj) / rhs(bi, bj);
  const double scale = std::max(1.0, lhs.norm());
  fit.residual = (lhs - fit.f * rhs).norm() / scale;
  return fit;
}

double v_sandwich_residual(const ModelParams& p) {
  const BoundaryData b = boundary_data(p);
  const Matrix V = v_matrix(p);
  const Matrix kp = k_minus_prime(0.0, p);
  const Matrix lhs = V * kp * V;
  const Matrix rhs = -kp + b.mu * b.U +
                     b.nu * Matrix::Identity(p.local_dim(), p.local_dim());
  return rel_residual(lhs, rhs);
}

}  // namespace a2n2
