#include "a2n2/chain.hpp"

namespace a2n2 {

namespace {
const Cx kI(0.0, 1.0);
}

Matrix two_site_h(const ModelParams& p) {
  p.validate();
  const int d = p.local_dim();
  return permutation_op(d) * r_prime_zero(p) / xi(0.0, p);
}

Matrix two_site_h_tilde(const ModelParams& p) {
  p.validate();
  if (p.set != BoundarySet::II)
    throw ConfigError("two_site_h_tilde is defined for boundary set II only");
  const int d = p.local_dim();
  const Matrix Id = Matrix::Identity(d, d);
  const Matrix kp = k_minus_prime(0.0, p);
  const BoundaryData b = boundary_data(p);
  return two_site_h(p) +
         (kron(kp, Id) - kron(Id, kp)) / (2.0 * b.kappa);
}

Matrix hamiltonian(const ModelParams& p) {
  p.validate();
  const int d = p.local_dim();
  const int N = p.N;
  long dim = 1;
  for (int i = 0; i < N; ++i) dim *= d;
  Matrix H = Matrix::Zero(dim, dim);
  const Matrix h = p.set == BoundarySet::I ? two_site_h(p) : two_site_h_tilde(p);
  for (int k = 1; k <= N - 1; ++k) H += site_embed(h, {k, k + 1}, N, d);
  if (p.set == BoundarySet::II) {
    const BoundaryData b = boundary_data(p);
    H += (b.mu / (2.0 * b.kappa)) * site_embed(b.U, {N}, N, d);
  }
  return H;
}

Matrix transfer_matrix(Cx u, const ModelParams& p) {
  p.validate();
  const int d = p.local_dim();
  const int N = p.N;
  const int a = N + 1;  // auxiliary slot, appended last
  const Matrix R = r_matrix(u, p);
  long dq = 1;
  for (int i = 0; i < N; ++i) dq *= d;

  Matrix acc = site_embed(k_plus(u, p), {a}, a, d);
  for (int k = N; k >= 1; --k) acc = acc * site_embed(R, {a, k}, a, d);
  acc = acc * site_embed(k_minus(u, p), {a}, a, d);
  for (int k = 1; k <= N; ++k) acc = acc * site_embed(R, {k, a}, a, d);
  return partial_trace(acc, dq, d, 2);
}

NormalizationConstants normalization_constants(const ModelParams& p) {
  p.validate();
  const Cx eta = p.eta;
  const double n = p.n;
  const int N = p.N;
  auto sh = [](Cx z) { return std::sinh(z); };
  auto ch = [](Cx z) { return std::cosh(z); };
  NormalizationConstants c;
  if (p.set == BoundarySet::I) {
    c.c1 = std::pow(4.0, N + 1) * sh((2.0 * n + 1.0) * eta) *
           ch((2.0 * n - 1.0) * eta) * std::pow(sh(2.0 * eta), 2 * N - 1) *
           std::pow(ch((2.0 * n + 1.0) * eta), 2 * N);
    c.c2 = ch((6.0 * n + 1.0) * eta) /
           (2.0 * sh((4.0 * n + 2.0) * eta) * ch((2.0 * n - 1.0) * eta));
  } else {
    const Cx phi = ch(eta) + kI * sh(2.0 * n * eta);
    c.c1 = std::pow(2.0, 2 * N + 1) * phi * phi * sh((4.0 * n + 2.0) * eta) *
           ch((2.0 * n + 3.0) * eta) *
           std::pow(sh(2.0 * eta) * ch((2.0 * n + 1.0) * eta), 2 * N - 1);
    c.c2 = ch((6.0 * n + 5.0) * eta) /
               (2.0 * sh((4.0 * n + 2.0) * eta) * ch((2.0 * n + 3.0) * eta)) +
           kI * ch(2.0 * n * eta) / phi;
  }
  return c;
}

}  // namespace a2n2
