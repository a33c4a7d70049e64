#include "a2n2/qgroup.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace a2n2 {

namespace {

constexpr int kCoproductDimCap = 8192;

// All Cartan elements are diagonal, so every group-like factor is a plain
// elementwise exponential.
Matrix diag_exp(const Matrix& a) {
  Matrix r = Matrix::Zero(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) r(i, i) = std::exp(a(i, i));
  return r;
}

// A coproduct of the shape Delta(E) = E x gR + gL x E with group-like
// gL, gR. Its N-fold extension is sum_k gL^{k-1} x E x gR^{N-k}.
struct TwoTerm {
  Matrix e, gL, gR;
};

Matrix materialize_left(const TwoTerm& t, int N) {
  Matrix m = t.e;
  Matrix glp = Matrix::Identity(1, 1);
  for (int k = 2; k <= N; ++k) {
    glp = kron(glp, t.gL);
    m = kron(m, t.gR) + kron(glp, t.e);
  }
  return m;
}

Matrix materialize_right(const TwoTerm& t, int N) {
  Matrix m = t.e;
  Matrix grp = Matrix::Identity(1, 1);
  for (int k = 2; k <= N; ++k) {
    grp = kron(t.gR, grp);
    m = kron(t.e, grp) + kron(t.gL, m);
  }
  return m;
}

// Group factors of the simple-root coproducts; index j runs 1..n for B_n
// and 1..n-1 for C_n (the C_n short-root pair is ladder-built instead).
TwoTerm simple_term(const GeneratorSet& g, const ModelParams& p, int j,
                    bool raising) {
  const int d = p.local_dim();
  const Matrix& hj = g.cartan[j - 1];
  const Matrix hj1 =
      (j < g.n) ? g.cartan[j] : Matrix::Zero(d, d);  // H_{n+1} == 0
  const Cx ipi(0.0, kPi);
  TwoTerm t;
  t.e = raising ? g.raising[j - 1] : g.lowering[j - 1];
  if (g.algebra == Algebra::Bn) {
    t.gR = diag_exp(ipi * hj + p.eta * (hj - hj1));
    t.gL = diag_exp(-ipi * hj - p.eta * (hj - hj1));
  } else {
    t.gR = diag_exp(ipi * hj1);
    t.gL = diag_exp(ipi * hj1 - 2.0 * p.eta * (hj - hj1));
  }
  return t;
}

TwoTerm extra_term(const GeneratorSet& g, const ModelParams& p,
                   bool raising) {
  const int d = p.local_dim();
  TwoTerm t;
  t.e = raising ? g.extra_raising : g.extra_lowering;
  t.gR = Matrix::Identity(d, d);
  t.gL = diag_exp(4.0 * p.eta * g.cartan[0]);
  return t;
}

// E_n^+- = (-1/2)^{n-1} [[..[[E_0^+-, E_1^-+], E_1^-+], ..], E_{n-1}^-+],
// applied verbatim to N-site coproducts.
Matrix ladder(const Matrix& e0, const std::vector<Matrix>& opposite, int n) {
  Matrix x = e0;
  for (int j = 1; j <= n - 1; ++j) {
    x = commutator(commutator(x, opposite[j - 1]), opposite[j - 1]);
  }
  return std::pow(-0.5, n - 1) * x;
}

Matrix nfold_cartan(const Matrix& h, int N, int d) {
  Matrix acc = site_embed(h, {1}, N, d);
  for (int k = 2; k <= N; ++k) acc += site_embed(h, {k}, N, d);
  return acc;
}

GeneratorSet base_generators(const ModelParams& p, Algebra alg) {
  const int n = p.n;
  const int d = p.local_dim();
  GeneratorSet g;
  g.algebra = alg;
  g.n = n;
  for (int a = 1; a <= n; ++a) {
    g.cartan.push_back(elementary(d, a, a) -
                       elementary(d, 2 * n + 2 - a, 2 * n + 2 - a));
    Matrix ep;
    if (alg == Algebra::Cn && a == n) {
      ep = elementary(d, n, n + 2);
    } else {
      ep = elementary(d, a, a + 1) + elementary(d, 2 * n + 1 - a, 2 * n + 2 - a);
    }
    g.raising.push_back(ep);
    g.lowering.push_back(ep.transpose());
  }
  if (alg == Algebra::Cn) {
    g.extra_raising = elementary(d, 1, 2 * n + 1);
    g.extra_lowering = elementary(d, 2 * n + 1, 1);
  }
  return g;
}

}  // namespace

GeneratorSet bn_generators(const ModelParams& p) {
  return base_generators(p, Algebra::Bn);
}

GeneratorSet cn_generators(const ModelParams& p) {
  return base_generators(p, Algebra::Cn);
}

std::vector<std::vector<int>> simple_roots(Algebra alg, int n) {
  std::vector<std::vector<int>> roots(n, std::vector<int>(n, 0));
  for (int j = 1; j < n; ++j) {
    roots[j - 1][j - 1] = 1;
    roots[j - 1][j] = -1;
  }
  roots[n - 1][n - 1] = (alg == Algebra::Bn) ? 1 : 2;
  return roots;
}

CoproductSet nfold_coproduct(const GeneratorSet& g, const ModelParams& p,
                             int N) {
  if (N < 1) throw ConfigError("nfold_coproduct: N must be >= 1");
  const int d = p.local_dim();
  double dim = 1.0;
  for (int k = 0; k < N; ++k) dim *= d;
  if (dim > kCoproductDimCap)
    throw ResourceCapError("nfold_coproduct: dimension exceeds cap");

  CoproductSet cop;
  cop.site_count = N;
  cop.algebra = g.algebra;
  for (const Matrix& h : g.cartan) cop.cartanN.push_back(nfold_cartan(h, N, d));

  const int n_simple = (g.algebra == Algebra::Bn) ? g.n : g.n - 1;
  std::vector<Matrix> raise_r, lower_r;  // right-nested, for the self-check
  for (int j = 1; j <= n_simple; ++j) {
    const TwoTerm tp = simple_term(g, p, j, true);
    const TwoTerm tm = simple_term(g, p, j, false);
    cop.raisingN.push_back(materialize_left(tp, N));
    cop.loweringN.push_back(materialize_left(tm, N));
    raise_r.push_back(materialize_right(tp, N));
    lower_r.push_back(materialize_right(tm, N));
  }
  if (g.algebra == Algebra::Cn) {
    const TwoTerm t0p = extra_term(g, p, true);
    const TwoTerm t0m = extra_term(g, p, false);
    cop.extra_raisingN = materialize_left(t0p, N);
    cop.extra_loweringN = materialize_left(t0m, N);
    cop.raisingN.push_back(ladder(cop.extra_raisingN, cop.loweringN, g.n));
    cop.loweringN.push_back(ladder(cop.extra_loweringN, cop.raisingN, g.n));
    // the two nesting orders must give the same ladder result
    const Matrix alt_p = ladder(materialize_right(t0p, N), lower_r, g.n);
    const Matrix alt_m = ladder(materialize_right(t0m, N), raise_r, g.n);
    if (rel_residual(cop.raisingN.back(), alt_p) > 1e-9 ||
        rel_residual(cop.loweringN.back(), alt_m) > 1e-9)
      throw std::runtime_error(
          "nfold_coproduct: nesting orders disagree for the ladder pair");
  }
  return cop;
}

CoproductSet coproduct_two_site(const GeneratorSet& g, const ModelParams& p) {
  return nfold_coproduct(g, p, 2);
}

double qrelation_residual(const GeneratorSet& g, const ModelParams& p) {
  const int d = p.local_dim();
  const Matrix id2 = Matrix::Identity(d * d, d * d);
  const CoproductSet cop = coproduct_two_site(g, p);
  const Cx ipi(0.0, kPi);
  double worst = 0.0;

  auto omega = [&](int i, int j) -> Matrix {
    if (std::abs(i - j) == 1)
      return kron(diag_exp(ipi * g.cartan[std::max(i, j) - 1]),
                  Matrix::Identity(d, d));
    return id2;
  };

  if (g.algebra == Algebra::Bn) {
    const Cx q = p.q();
    for (int i = 1; i <= g.n; ++i) {
      // Delta(H_{n+1}) == 0
      const Matrix dhd = (i < g.n) ? (cop.cartanN[i - 1] - cop.cartanN[i])
                                   : cop.cartanN[i - 1];
      for (int j = 1; j <= g.n; ++j) {
        const Matrix om = omega(i, j);
        const Matrix lhs = om * cop.raisingN[i - 1] * cop.loweringN[j - 1] -
                           cop.loweringN[j - 1] * cop.raisingN[i - 1] * om;
        Matrix rhs = Matrix::Zero(d * d, d * d);
        if (i == j)
          rhs = (diag_exp(2.0 * p.eta * dhd) - diag_exp(-2.0 * p.eta * dhd)) /
                (q - 1.0 / q);
        worst = std::max(worst, rel_residual(lhs, rhs));
      }
    }
  } else {
    for (int i = 1; i <= g.n - 1; ++i) {
      for (int j = 1; j <= g.n - 1; ++j) {
        const Matrix& ep = cop.raisingN[i - 1];
        const Matrix& em = cop.loweringN[j - 1];
        Matrix lhs, rhs;
        if (i == j) {
          const Matrix dhd = cop.cartanN[i - 1] - cop.cartanN[i];
          lhs = ep * em - std::exp(4.0 * p.eta) * em * ep;
          rhs = (diag_exp(-4.0 * p.eta * dhd) - id2) /
                (std::exp(-4.0 * p.eta) - 1.0);
        } else if (std::abs(i - j) == 1) {
          const Matrix om = omega(i, j);
          lhs = std::exp(2.0 * p.eta) * om * ep * em;
          rhs = em * ep * om;
        } else {
          lhs = ep * em;
          rhs = em * ep;
        }
        worst = std::max(worst, rel_residual(lhs, rhs));
      }
    }
  }
  return worst;
}

double coassociativity_residual(const GeneratorSet& g, const ModelParams& p) {
  double worst = 0.0;
  const int n_simple = (g.algebra == Algebra::Bn) ? g.n : g.n - 1;
  std::vector<Matrix> raise_l, raise_r, lower_l, lower_r;
  for (int j = 1; j <= n_simple; ++j) {
    for (bool up : {true, false}) {
      const TwoTerm t = simple_term(g, p, j, up);
      const Matrix ml = materialize_left(t, 3);
      const Matrix mr = materialize_right(t, 3);
      worst = std::max(worst, rel_residual(ml, mr));
      (up ? raise_l : lower_l).push_back(ml);
      (up ? raise_r : lower_r).push_back(mr);
    }
  }
  if (g.algebra == Algebra::Cn) {
    for (bool up : {true, false}) {
      const TwoTerm t0 = extra_term(g, p, up);
      const Matrix ml = materialize_left(t0, 3);
      const Matrix mr = materialize_right(t0, 3);
      worst = std::max(worst, rel_residual(ml, mr));
      const Matrix lad_l = ladder(ml, up ? lower_l : raise_l, g.n);
      const Matrix lad_r = ladder(mr, up ? lower_r : raise_r, g.n);
      worst = std::max(worst, rel_residual(lad_l, lad_r));
    }
  }
  return worst;
}

double symmetry_residual(const CoproductSet& cop, const Matrix& h) {
  std::vector<const Matrix*> gens;
  for (const Matrix& m : cop.cartanN) gens.push_back(&m);
  for (const Matrix& m : cop.raisingN) gens.push_back(&m);
  for (const Matrix& m : cop.loweringN) gens.push_back(&m);
  if (cop.extra_raisingN.size() > 0) {
    gens.push_back(&cop.extra_raisingN);
    gens.push_back(&cop.extra_loweringN);
  }
  double worst = 0.0;
  for (const Matrix* m : gens) {
    if (m->rows() != h.rows())
      throw ConfigError("symmetry_residual: dimension mismatch");
    worst = std::max(worst, commutator(*m, h).norm() /
                                std::max(1.0, m->norm() * h.norm()));
  }
  return worst;
}

int highest_weight_count(const CoproductSet& cop,
                         const std::vector<Vector>& eigenspace) {
  if (eigenspace.empty()) return 0;
  const int dim = static_cast<int>(eigenspace.front().size());
  const int k = static_cast<int>(eigenspace.size());
  Matrix basis(dim, k);
  for (int i = 0; i < k; ++i) basis.col(i) = eigenspace[i];

  Eigen::JacobiSVD<Matrix> bsvd(basis,
                                Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& bs = bsvd.singularValues();
  if (bs(0) <= 0.0 || bs(k - 1) / bs(0) < 1e-10)
    throw ConfigError("highest_weight_count: ill-conditioned eigenbasis, "
                      "cond = " +
                      std::to_string(bs(0) / std::max(bs(k - 1), 1e-300)));
  const Matrix q = bsvd.matrixU().leftCols(k);

  const int n_raise = static_cast<int>(cop.raisingN.size());
  Matrix stacked(n_raise * dim, k);
  for (int i = 0; i < n_raise; ++i)
    stacked.middleRows(i * dim, dim) = cop.raisingN[i] * q;

  Eigen::JacobiSVD<Matrix> svd(stacked);
  const auto& s = svd.singularValues();
  if (s(0) < 1e-12) return k;  // every raising annihilates the whole span
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > 1e-7 * s(0)) ++rank;
  return k - rank;
}

}  // namespace a2n2
