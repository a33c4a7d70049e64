#pragma once

// Classical B_n / C_n representation theory: Dynkin labels and weights in
// the orthogonal basis, the Weyl dimension formula, weight systems via the
// Freudenthal recursion, and decomposition of tensor powers of the site
// representation by highest-weight peeling.
//
// Weights are carried in doubled integer coordinates (2 h_1, ..., 2 h_n) so
// that B_n spinor weights remain exact; everything here is integer
// arithmetic, floating point is deliberately absent.

#include <map>
#include <string>
#include <vector>

#include "a2n2/model.hpp"

namespace a2n2 {

using Weight2 = std::vector<int>;  // doubled orthogonal coordinates

struct IrrepLabel {
  Algebra algebra = Algebra::Bn;
  int n = 1;
  std::vector<int> labels;  // Dynkin labels [a_1,...,a_n], all >= 0

  bool operator<(const IrrepLabel& o) const {
    return std::tie(algebra, n, labels) < std::tie(o.algebra, o.n, o.labels);
  }
  bool operator==(const IrrepLabel& o) const {
    return algebra == o.algebra && n == o.n && labels == o.labels;
  }
  std::string to_string() const;  // "[a1,...,an]"
};

struct Decomposition {
  std::map<IrrepLabel, long long> entries;  // label -> multiplicity
  long long total_dimension() const;
};

inline constexpr long long kRepDimCap = 10000;

// (2 h_1, ..., 2 h_n) = sum_j a_j * (doubled fundamental weights)
Weight2 label_to_weight(const IrrepLabel& l);

// a_i = h_i - h_{i+1}, a_n = 2 h_n (B_n) or h_n (C_n); throws ConfigError
// if the weight is not dominant integral for the algebra.
IrrepLabel weight_to_label(const Weight2& w2, Algebra alg);

long long weyl_dimension(const IrrepLabel& l);

// Full weight multiset of the irrep; mults sum to weyl_dimension(l).
std::map<Weight2, long long> weight_system(const IrrepLabel& l,
                                           long long cap = kRepDimCap);

// Decomposition of the N-th tensor power of the (2n+1)-dimensional site
// representation under the given classical algebra.
Decomposition tensor_power_decompose(const ModelParams& p, Algebra alg,
                                     long long cap = kRepDimCap);

}  // namespace a2n2
