#pragma once

// Dense tensor-algebra plumbing shared by every other module: Kronecker
// products, elementary matrices, operator embedding on a chain of equal
// slots, partial transpose/trace on a two-factor space, a general complex
// eigensolver wrapper, and a Richardson-extrapolated numerical derivative.
//
// Conventions. All tensor products are ordered with the LEFT factor varying
// slowest: kron(A,B)[(i-1)*q + k, (j-1)*s + l] = A[i,j] * B[k,l]. Slot 1 of
// a chain is the slowest index; the auxiliary slot of a transfer matrix is
// appended last and is therefore the fastest index.

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace a2n2 {

using Cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Relative Frobenius tolerance used by the identity checks.
inline constexpr double kIdentityTol = 1e-9;

// Dimension cap for the dense eigensolver.
inline constexpr int kEigDimCap = 1024;

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Matrix kron(const Matrix& a, const Matrix& b);

// 1-based elementary matrix e_{ab} of size dim x dim.
Matrix elementary(int dim, int a, int b);

// P = sum_{a,b} e_{ab} (x) e_{ba} on V (x) V.
Matrix permutation_op(int d);

// Partial transpose / partial trace on a two-factor space of dimensions
// (d1, d2); `which` selects the factor (1 or 2).
Matrix partial_transpose(const Matrix& m, int d1, int d2, int which);
Matrix partial_trace(const Matrix& m, int d1, int d2, int which);

// Embed `op`, acting on d^{sites.size()}, into a chain of nslots slots of
// local dimension d. Sites are 1-based and distinct; the j-th tensor factor
// of op lands on slot sites[j-1]. Sites need not be ordered or adjacent.
Matrix site_embed(const Matrix& op, const std::vector<int>& sites, int nslots,
                  int d);

struct EigResult {
  Vector values;
  Matrix vectors;  // eigenvectors as columns, aligned with `values`
};

// Dense non-Hermitian eigendecomposition (dimension capped at kEigDimCap).
EigResult eig(const Matrix& m);

// d/du f(u): central difference with base step 1e-5 plus one Richardson
// extrapolation step combining the h and h/2 estimates.
Matrix num_derivative(const std::function<Matrix(Cx)>& f, Cx u);

double fnorm(const Matrix& m);

// || lhs - rhs ||_F / max(1, ||lhs||_F, ||rhs||_F)
double rel_residual(const Matrix& lhs, const Matrix& rhs);

Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace a2n2
