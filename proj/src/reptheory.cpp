#include "a2n2/reptheory.hpp"

#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace a2n2 {

namespace {

long long dot2(const Weight2& a, const Weight2& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (long long)a[i] * b[i];
  return s;
}

Weight2 add_scaled(const Weight2& a, const Weight2& b, int k) {
  Weight2 r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += k * b[i];
  return r;
}

// doubled half-sum of positive roots: 2(n-i)+1 for B_n, 2(n-i+1) for C_n
Weight2 rho2(Algebra alg, int n) {
  Weight2 r(n);
  for (int i = 0; i < n; ++i)
    r[i] = (alg == Algebra::Bn) ? 2 * (n - i) - 1 : 2 * (n - i);
  return r;
}

// positive roots, doubled: e_i -+ e_j (i<j) plus e_i (B_n) or 2e_i (C_n)
std::vector<Weight2> positive_roots2(Algebra alg, int n) {
  std::vector<Weight2> roots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Weight2 diff(n, 0), sum(n, 0);
      diff[i] = 2;
      diff[j] = -2;
      sum[i] = 2;
      sum[j] = 2;
      roots.push_back(diff);
      roots.push_back(sum);
    }
    Weight2 e(n, 0);
    e[i] = (alg == Algebra::Bn) ? 2 : 4;
    roots.push_back(e);
  }
  return roots;
}

std::vector<Weight2> simple_roots2(Algebra alg, int n) {
  std::vector<Weight2> roots;
  for (int i = 0; i + 1 < n; ++i) {
    Weight2 r(n, 0);
    r[i] = 2;
    r[i + 1] = -2;
    roots.push_back(r);
  }
  Weight2 last(n, 0);
  last[n - 1] = (alg == Algebra::Bn) ? 2 : 4;
  roots.push_back(last);
  return roots;
}

// Height of diff2 (a doubled root-lattice element) in simple-root steps,
// times two; returns -1 if diff2 is not a nonnegative combination.
long long depth2(const Weight2& diff2, Algebra alg) {
  const int n = static_cast<int>(diff2.size());
  long long total = 0, partial = 0;
  for (int i = 0; i < n; ++i) {
    partial += diff2[i];  // doubled coefficient of simple root i (B_n form)
    long long c = partial;
    if (alg == Algebra::Cn && i == n - 1) {
      if (partial % 2 != 0) return -1;
      c = partial / 2;
    }
    if (c < 0) return -1;
    total += c;
  }
  return total;
}

}  // namespace

std::string IrrepLabel::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(labels[i]);
  }
  return s + "]";
}

long long Decomposition::total_dimension() const {
  long long total = 0;
  for (const auto& [label, mult] : entries)
    total += mult * weyl_dimension(label);
  return total;
}

Weight2 label_to_weight(const IrrepLabel& l) {
  const int n = l.n;
  Weight2 w(n, 0);
  for (int j = 1; j <= n; ++j) {
    const int a = l.labels[j - 1];
    if (a < 0) throw ConfigError("label_to_weight: negative Dynkin label");
    // doubled fundamental weight: 2's in the first j slots, except the
    // B_n spinor weight which is all 1's
    const int entry = (j == n && l.algebra == Algebra::Bn) ? 1 : 2;
    const int width = (j == n) ? n : j;
    for (int i = 0; i < width; ++i) w[i] += a * entry;
  }
  return w;
}

IrrepLabel weight_to_label(const Weight2& w2, Algebra alg) {
  const int n = static_cast<int>(w2.size());
  IrrepLabel l;
  l.algebra = alg;
  l.n = n;
  l.labels.resize(n);
  for (int i = 0; i + 1 < n; ++i) {
    const int diff = w2[i] - w2[i + 1];
    if (diff < 0 || diff % 2 != 0)
      throw ConfigError("weight_to_label: weight is not dominant integral");
    l.labels[i] = diff / 2;
  }
  const int last = w2[n - 1];
  if (last < 0)
    throw ConfigError("weight_to_label: weight is not dominant integral");
  if (alg == Algebra::Bn) {
    l.labels[n - 1] = last;
  } else {
    if (last % 2 != 0)
      throw ConfigError("weight_to_label: weight is not dominant integral");
    l.labels[n - 1] = last / 2;
  }
  return l;
}

long long weyl_dimension(const IrrepLabel& l) {
  const Weight2 lam = label_to_weight(l);
  const Weight2 rho = rho2(l.algebra, l.n);
  const Weight2 lamrho = add_scaled(lam, rho, 1);
  long long num = 1, den = 1;
  for (const Weight2& a : positive_roots2(l.algebra, l.n)) {
    long long top = dot2(lamrho, a), bot = dot2(rho, a);
    long long g = std::gcd(top, bot);
    num *= top / g;
    den *= bot / g;
    g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1 || num <= 0)
    throw std::logic_error("weyl_dimension: non-integral result");
  return num;
}

std::map<Weight2, long long> weight_system(const IrrepLabel& l,
                                           long long cap) {
  const long long dim = weyl_dimension(l);
  if (dim > cap)
    throw ResourceCapError("weight_system: dimension exceeds cap");

  static std::mutex cache_mutex;
  static std::map<IrrepLabel, std::map<Weight2, long long>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
  }

  const Weight2 lam = label_to_weight(l);
  const Weight2 rho = rho2(l.algebra, l.n);
  const auto proots = positive_roots2(l.algebra, l.n);
  const auto sroots = simple_roots2(l.algebra, l.n);
  std::vector<long long> pheight;
  for (const Weight2& a : proots) pheight.push_back(depth2(a, l.algebra));

  const long long lam_norm = dot2(add_scaled(lam, rho, 1),
                                  add_scaled(lam, rho, 1));
  std::map<Weight2, long long> mult;
  mult[lam] = 1;

  // breadth-first by depth; only weights with positive multiplicity spawn
  // children, which reaches every weight of the irrep
  std::map<long long, std::set<Weight2>> frontier;
  std::set<Weight2> seen{lam};
  auto spawn = [&](const Weight2& w) {
    for (const Weight2& s : sroots) {
      const Weight2 child = add_scaled(w, s, -1);
      if (seen.insert(child).second)
        frontier[depth2(add_scaled(lam, child, -1), l.algebra)].insert(child);
    }
  };
  spawn(lam);

  while (!frontier.empty()) {
    auto bucket = frontier.begin();
    const std::set<Weight2> level = std::move(bucket->second);
    frontier.erase(bucket);
    for (const Weight2& mu : level) {
      const long long mu_depth = depth2(add_scaled(lam, mu, -1), l.algebra);
      long long rhs = 0;
      for (size_t r = 0; r < proots.size(); ++r) {
        const long long kmax = mu_depth / pheight[r];
        for (long long k = 1; k <= kmax; ++k) {
          const Weight2 cand = add_scaled(mu, proots[r], static_cast<int>(k));
          auto it = mult.find(cand);
          if (it != mult.end()) rhs += it->second * dot2(cand, proots[r]);
        }
      }
      const long long denom =
          lam_norm - dot2(add_scaled(mu, rho, 1), add_scaled(mu, rho, 1));
      long long m = 0;
      if (denom > 0) {
        if ((2 * rhs) % denom != 0)
          throw std::logic_error("weight_system: non-integral multiplicity");
        m = (2 * rhs) / denom;
      }
      if (m > 0) {
        mult[mu] = m;
        spawn(mu);
      }
    }
  }

  long long total = 0;
  for (const auto& [w, m] : mult) total += m;
  if (total != dim)
    throw std::logic_error("weight_system: multiplicities do not sum to dim");

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache[l] = mult;
  return mult;
}

Decomposition tensor_power_decompose(const ModelParams& p, Algebra alg,
                                     long long cap) {
  p.validate();
  const int d = p.local_dim();
  long long dim = 1;
  for (int k = 0; k < p.N; ++k) {
    dim *= d;
    if (dim > cap)
      throw ResourceCapError("tensor_power_decompose: dimension exceeds cap");
  }

  // per-site doubled weights: basis state alpha contributes
  // delta_{alpha,i} - delta_{alpha,2n+2-i} to h_i
  std::vector<Weight2> site(d, Weight2(p.n, 0));
  for (int a = 1; a <= d; ++a) {
    for (int i = 1; i <= p.n; ++i) {
      if (a == i) site[a - 1][i - 1] += 2;
      if (a == 2 * p.n + 2 - i) site[a - 1][i - 1] -= 2;
    }
  }

  std::map<Weight2, long long> bag;
  for (long long state = 0; state < dim; ++state) {
    Weight2 w(p.n, 0);
    long long rest = state;
    for (int s = 0; s < p.N; ++s) {
      const int a = static_cast<int>(rest % d);
      rest /= d;
      for (int i = 0; i < p.n; ++i) w[i] += site[a][i];
    }
    ++bag[w];
  }

  Decomposition dec;
  while (!bag.empty()) {
    const auto top = std::prev(bag.end());  // lexicographic maximum
    const Weight2 w = top->first;
    const long long c = top->second;
    const IrrepLabel label = weight_to_label(w, alg);
    for (const auto& [w2, m] : weight_system(label, cap)) {
      auto it = bag.find(w2);
      if (it == bag.end() || it->second < c * m)
        throw std::logic_error(
            "tensor_power_decompose: negative multiplicity during peeling");
      it->second -= c * m;
      if (it->second == 0) bag.erase(it);
    }
    dec.entries[label] += c;
  }
  return dec;
}

}  // namespace a2n2
