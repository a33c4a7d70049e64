#include "a2n2/rmatrix.hpp"

#include <algorithm>
#include <random>

namespace a2n2 {

Cx xi(Cx u, const ModelParams& p) {
  const Cx eta = p.eta;
  const double tn = 2.0 * p.n + 1.0;
  return 2.0 * std::sinh(u / 2.0 - 2.0 * eta) *
         std::cosh(u / 2.0 - tn * eta);
}

int conj_index(int alpha, int n) { return 2 * n + 2 - alpha; }

double bar_index(int alpha, int n) {
  if (alpha < n + 1) return alpha + 0.5;
  if (alpha == n + 1) return alpha;
  return alpha - 0.5;
}

namespace {

// Assembles R(u) (deriv = false) or its entrywise analytic u-derivative
// (deriv = true). The entry families are: c(u) on (aa,aa) with a != a',
// b(u) on (ab,ab) with a != b, a != b', e(u)/ebar(u) on (ab,ba) for
// a < b / a > b with a != b', and a_{ab}(u) on (aa',bb') for all a, b.
Matrix r_build(Cx u, const ModelParams& p, bool deriv) {
  p.validate();
  const int n = p.n;
  const int d = p.local_dim();
  const Cx eta = p.eta;
  const double tn = 2.0 * n;  // 2n as a real prefactor
  const Cx s2 = std::sinh(2.0 * eta);
  auto sh = [](Cx z) { return std::sinh(z); };
  auto ch = [](Cx z) { return std::cosh(z); };
  auto ex = [](Cx z) { return std::exp(z); };

  const Cx c_val = !deriv ? 2.0 * sh(u / 2.0 - 2.0 * eta) * ch(u / 2.0 - (tn + 1.0) * eta)
                          : ch(u - (tn + 3.0) * eta);
  const Cx b_val = !deriv ? 2.0 * sh(u / 2.0) * ch(u / 2.0 - (tn + 1.0) * eta)
                          : ch(u - (tn + 1.0) * eta);
  const Cx e_val = !deriv ? -2.0 * ex(-u / 2.0) * s2 * ch(u / 2.0 - (tn + 1.0) * eta)
                          : s2 * ex(-u + (tn + 1.0) * eta);
  // ebar(u) = e^u e(u)
  const Cx e_plain = -2.0 * ex(-u / 2.0) * s2 * ch(u / 2.0 - (tn + 1.0) * eta);
  const Cx e_deriv = s2 * ex(-u + (tn + 1.0) * eta);
  const Cx ebar_val = !deriv ? ex(u) * e_plain : ex(u) * (e_plain + e_deriv);

  auto a_fn = [&](int al, int be) -> Cx {
    const int alp = conj_index(al, n);
    const int bep = conj_index(be, n);
    const double ab = bar_index(al, n) - bar_index(be, n);
    if (al == be) {
      if (al != alp)
        return !deriv ? sh(u - (tn - 1.0) * eta) + sh((tn - 1.0) * eta)
                      : ch(u - (tn - 1.0) * eta);
      return !deriv ? sh(u - (tn + 1.0) * eta) + sh((tn + 1.0) * eta) +
                          sh((tn - 1.0) * eta) - sh((tn + 3.0) * eta)
                    : ch(u - (tn + 1.0) * eta);
    }
    if (al < be) {
      if (al != bep) {
        const Cx pre = ex(((tn + 1.0) + 2.0 * ab) * eta);
        return !deriv ? -2.0 * pre * ex(-u / 2.0) * sh(u / 2.0) * s2
                      : -pre * ex(-u) * s2;
      }
      const Cx t1 = 2.0 * ex((2.0 * (tn + 1.0) - 2.0 * be + 2.0) * eta) *
                    sh((tn + 3.0 - 2.0 * be) * eta) * s2;
      if (deriv) return -t1 * ex(-u);
      return t1 * ex(-u) - 2.0 * ex(((tn + 3.0) - 2.0 * be) * eta) *
                               ch((2.0 * (tn + 2.0) - 2.0 * be) * eta) * s2;
    }
    // al > be
    if (al != bep) {
      const Cx pre = ex((-(tn + 1.0) + 2.0 * ab) * eta);
      return !deriv ? 2.0 * pre * ex(u / 2.0) * sh(u / 2.0) * s2
                    : pre * ex(u) * s2;
    }
    const Cx t1 = 2.0 * sh(((tn + 1.0) - 2.0 * be) * eta) * s2;
    if (deriv) return t1 * ex(u - 2.0 * be * eta);
    return t1 * ex(u - 2.0 * be * eta) -
           2.0 * ex(((tn + 1.0) - 2.0 * be) * eta) * ch(2.0 * be * eta) * s2;
  };

  auto idx = [d](int a, int b) { return (a - 1) * d + (b - 1); };
  Matrix r = Matrix::Zero(d * d, d * d);
  for (int al = 1; al <= d; ++al) {
    if (al != conj_index(al, n)) r(idx(al, al), idx(al, al)) += c_val;
  }
  for (int al = 1; al <= d; ++al)
    for (int be = 1; be <= d; ++be) {
      if (al != be && al != conj_index(be, n))
        r(idx(al, be), idx(al, be)) += b_val;
    }
  for (int al = 1; al <= d; ++al)
    for (int be = 1; be <= d; ++be) {
      if (al == be || al == conj_index(be, n)) continue;
      if (al < be)
        r(idx(al, be), idx(be, al)) += e_val;
      else
        r(idx(al, be), idx(be, al)) += ebar_val;
    }
  for (int al = 1; al <= d; ++al)
    for (int be = 1; be <= d; ++be)
      r(idx(al, conj_index(al, n)), idx(be, conj_index(be, n))) += a_fn(al, be);
  return r;
}

}  // namespace

Matrix r_matrix(Cx u, const ModelParams& p) { return r_build(u, p, false); }

Matrix r_prime(Cx u, const ModelParams& p) { return r_build(u, p, true); }

Matrix r_prime_zero(const ModelParams& p) { return r_build(0.0, p, true); }

Matrix v_matrix(const ModelParams& p) {
  p.validate();
  const int n = p.n;
  const int d = p.local_dim();
  Matrix v = Matrix::Zero(d, d);
  for (int al = 1; al <= d; ++al) {
    const int alp = conj_index(al, n);
    if (al == alp)
      v(al - 1, alp - 1) = 1.0;
    else if (al < alp)
      v(al - 1, alp - 1) = std::exp((-(2.0 * n + 1.0) + 2.0 * al) * p.eta);
    else
      v(al - 1, alp - 1) = std::exp(((2.0 * n + 1.0) - 2.0 * alp) * p.eta);
  }
  return v;
}

Matrix m_matrix(const ModelParams& p) {
  p.validate();
  const int n = p.n;
  const int d = p.local_dim();
  Matrix m = Matrix::Zero(d, d);
  for (int al = 1; al <= d; ++al)
    m(al - 1, al - 1) = std::exp(4.0 * (n + 1.0 - bar_index(al, n)) * p.eta);
  return m;
}

Matrix crossing_projector(const ModelParams& p) {
  const double dd = 2.0 * p.n + 1.0;
  return r_matrix(-p.rho(), p) / (dd * xi(0.0, p));
}

double RPropertyReport::max() const {
  return std::max({ybe, pt, unitarity, regularity, crossing, v_sandwich});
}

RPropertyReport r_property_report(const ModelParams& p, int npoints,
                                  std::uint64_t seed) {
  p.validate();
  if (npoints < 1) throw ConfigError("r_property_report: npoints must be >= 1");
  const int d = p.local_dim();
  const Matrix P = permutation_op(d);
  const Matrix Id = Matrix::Identity(d, d);
  const Matrix I2 = Matrix::Identity(d * d, d * d);
  const Matrix V = v_matrix(p);
  const Matrix V1 = kron(V, Id);
  const Matrix V2 = kron(Id, V);
  const Cx rho = p.rho();

  RPropertyReport rep;
  rep.regularity = rel_residual(r_matrix(0.0, p), xi(0.0, p) * P);

  std::mt19937_64 rng(seed);
  // |u| <= 2 via a square box of half-side 2/sqrt(2)
  std::uniform_real_distribution<double> box(-1.41421356, 1.41421356);
  auto draw = [&]() { return Cx(box(rng), box(rng)); };

  for (int k = 0; k < npoints; ++k) {
    const Cx u = draw(), v = draw();
    const Matrix Ru = r_matrix(u, p);
    const Matrix Rv = r_matrix(v, p);
    const Matrix Ruv = r_matrix(u - v, p);

    const Matrix r12 = kron(Ruv, Id);
    const Matrix r13 = site_embed(r_matrix(u, p), {1, 3}, 3, d);
    const Matrix r23 = kron(Id, Rv);
    rep.ybe = std::max(rep.ybe, rel_residual(r12 * r13 * r23, r23 * r13 * r12));

    rep.pt = std::max(rep.pt, rel_residual(P * Ru * P, Ru.transpose().eval()));

    const Matrix R21mu = P * r_matrix(-u, p) * P;
    rep.unitarity =
        std::max(rep.unitarity, rel_residual(Ru * R21mu, xi(u, p) * xi(-u, p) * I2));

    const Matrix Rcross = partial_transpose(r_matrix(-u - rho, p), d, d, 2);
    rep.crossing = std::max(rep.crossing, rel_residual(Ru, V1 * Rcross * V1));

    const Matrix R21u = P * Ru * P;
    rep.v_sandwich =
        std::max(rep.v_sandwich, rel_residual(V1 * Ru * V1, V2 * R21u * V2));
  }
  return rep;
}

}  // namespace a2n2
