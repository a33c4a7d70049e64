#include "a2n2/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace a2n2 {

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

Matrix elementary(int dim, int a, int b) {
  if (dim < 1) throw ConfigError("elementary: dim must be positive");
  if (a < 1 || a > dim || b < 1 || b > dim)
    throw ConfigError("elementary: 1-based index out of range");
  Matrix m = Matrix::Zero(dim, dim);
  m(a - 1, b - 1) = 1.0;
  return m;
}

Matrix permutation_op(int d) {
  if (d < 1) throw ConfigError("permutation_op: d must be positive");
  Matrix p = Matrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) p(a * d + b, b * d + a) = 1.0;
  return p;
}

static void check_two_factor(const Matrix& m, int d1, int d2) {
  if (d1 < 1 || d2 < 1) throw ConfigError("two-factor dims must be positive");
  const long dim = static_cast<long>(d1) * d2;
  if (m.rows() != dim || m.cols() != dim)
    throw ConfigError("matrix does not match the (d1, d2) factor structure");
}

Matrix partial_transpose(const Matrix& m, int d1, int d2, int which) {
  check_two_factor(m, d1, d2);
  if (which != 1 && which != 2)
    throw ConfigError("partial_transpose: which must be 1 or 2");
  Matrix out(m.rows(), m.cols());
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b)
      for (int c = 0; c < d1; ++c)
        for (int e = 0; e < d2; ++e) {
          const Cx v = m(a * d2 + b, c * d2 + e);
          if (which == 1)
            out(c * d2 + b, a * d2 + e) = v;
          else
            out(a * d2 + e, c * d2 + b) = v;
        }
  return out;
}

Matrix partial_trace(const Matrix& m, int d1, int d2, int which) {
  check_two_factor(m, d1, d2);
  if (which != 1 && which != 2)
    throw ConfigError("partial_trace: which must be 1 or 2");
  if (which == 1) {
    Matrix out = Matrix::Zero(d2, d2);
    for (int b = 0; b < d2; ++b)
      for (int e = 0; e < d2; ++e)
        for (int a = 0; a < d1; ++a) out(b, e) += m(a * d2 + b, a * d2 + e);
    return out;
  }
  Matrix out = Matrix::Zero(d1, d1);
  for (int a = 0; a < d1; ++a)
    for (int c = 0; c < d1; ++c)
      for (int b = 0; b < d2; ++b) out(a, c) += m(a * d2 + b, c * d2 + b);
  return out;
}

Matrix site_embed(const Matrix& op, const std::vector<int>& sites, int nslots,
                  int d) {
  const int m = static_cast<int>(sites.size());
  if (m < 1) throw ConfigError("site_embed: empty site list");
  if (nslots < 1 || d < 1) throw ConfigError("site_embed: bad dimensions");
  long dm = 1;
  for (int i = 0; i < m; ++i) dm *= d;
  if (op.rows() != dm || op.cols() != dm)
    throw ConfigError("site_embed: operator does not act on d^{|sites|}");
  std::vector<char> used(nslots + 1, 0);
  for (int s : sites) {
    if (s < 1 || s > nslots) throw ConfigError("site_embed: site out of range");
    if (used[s]) throw ConfigError("site_embed: repeated site");
    used[s] = 1;
  }

  long dn = 1;
  for (int i = 0; i < nslots; ++i) dn *= d;
  std::vector<long> stride(nslots + 1);  // slot 1 is slowest
  {
    long s = 1;
    for (int k = nslots; k >= 1; --k) {
      stride[k] = s;
      s *= d;
    }
  }
  std::vector<int> rest;
  for (int s = 1; s <= nslots; ++s)
    if (!used[s]) rest.push_back(s);
  long drest = 1;
  for (std::size_t i = 0; i < rest.size(); ++i) drest *= d;
  std::vector<long> rest_offsets(drest, 0);
  for (long x = 0; x < drest; ++x) {
    long t = x, add = 0;
    for (int i = static_cast<int>(rest.size()) - 1; i >= 0; --i) {
      add += (t % d) * stride[rest[i]];
      t /= d;
    }
    rest_offsets[x] = add;
  }

  Matrix out = Matrix::Zero(dn, dn);
  std::vector<int> rdig(m), cdig(m);
  for (long r = 0; r < dm; ++r) {
    {
      long t = r;
      for (int i = m - 1; i >= 0; --i) {
        rdig[i] = static_cast<int>(t % d);
        t /= d;
      }
    }
    for (long c = 0; c < dm; ++c) {
      const Cx val = op(r, c);
      if (val == Cx(0.0, 0.0)) continue;
      {
        long t = c;
        for (int i = m - 1; i >= 0; --i) {
          cdig[i] = static_cast<int>(t % d);
          t /= d;
        }
      }
      long row = 0, col = 0;
      for (int i = 0; i < m; ++i) {
        row += rdig[i] * stride[sites[i]];
        col += cdig[i] * stride[sites[i]];
      }
      for (long x = 0; x < drest; ++x)
        out(row + rest_offsets[x], col + rest_offsets[x]) = val;
    }
  }
  return out;
}

EigResult eig(const Matrix& m) {
  if (m.rows() != m.cols()) throw ConfigError("eig: matrix must be square");
  if (m.rows() > kEigDimCap)
    throw ResourceCapError("eig: dimension exceeds the dense cap");
  Eigen::ComplexEigenSolver<Matrix> es(m, true);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eig: solver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

Matrix num_derivative(const std::function<Matrix(Cx)>& f, Cx u) {
  const double h = 1e-5;
  auto central = [&](double hh) -> Matrix {
    return (f(u + hh) - f(u - hh)) / (2.0 * hh);
  };
  const Matrix d1 = central(h);
  const Matrix d2 = central(h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

double fnorm(const Matrix& m) { return m.norm(); }

double rel_residual(const Matrix& lhs, const Matrix& rhs) {
  const double scale = std::max({1.0, lhs.norm(), rhs.norm()});
  return (lhs - rhs).norm() / scale;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace a2n2
