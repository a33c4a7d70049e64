// End-to-end acceptance suite. Ten independent checks cover the factorization
// and boundary identities, the commuting transfer family, the quantum-group
// structure, representation-theoretic bookkeeping, replication of the stored
// reference tables, eigenvalue cross-checks between the closed-form and dense
// routes, the completeness sweep with reconciliation, the highest-weight
// property, and a set of negative controls. One [PASS]/[FAIL] line is printed
// per check; the exit code is the number of failures.
//
// Stages run in dependency order (the table replication feeds the eigenvalue
// cross-checks, the sweeps feed the highest-weight check); the summary lines
// are buffered and printed in numeric order at the end.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "a2n2/bethe.hpp"
#include "a2n2/chain.hpp"
#include "a2n2/kmatrix.hpp"
#include "a2n2/qgroup.hpp"
#include "a2n2/report.hpp"
#include "a2n2/reptheory.hpp"
#include "a2n2/rmatrix.hpp"
#include "a2n2/spectrum.hpp"
#include "a2n2/tables.hpp"

namespace {

using namespace a2n2;
using json = nlohmann::json;

constexpr std::uint64_t kSeed = 20240901;
const Cx kProbe1(0.37, 0.21);
const Cx kProbe2(0.83, -0.41);

struct Line {
  int id;
  bool pass;
  std::string name;
  std::string detail;
  double secs;
};
std::vector<Line> g_lines;

double now_s() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

void record(int id, const std::string& name, bool pass,
            const std::string& detail, double secs) {
  g_lines.push_back({id, pass, name, detail, secs});
  std::fprintf(stderr, "  .. %02d %s: %s (%.1fs)\n", id, name.c_str(),
               pass ? "pass" : "FAIL", secs);
}

ModelParams mk(int n, int N, BoundarySet set) {
  ModelParams p;
  p.n = n;
  p.N = N;
  p.eta = Cx(0.0, -0.1);
  p.set = set;
  return p;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

double comm_res(const Matrix& a, const Matrix& b) {
  return fnorm(commutator(a, b)) / std::max(1.0, fnorm(a) * fnorm(b));
}

double herm_res(const Matrix& h) {
  return fnorm(h - h.adjoint()) / std::max(1.0, fnorm(h));
}

// distance with the 2 pi i periodicity of the rapidity folded in
double circ_dist(Cx a, Cx b) {
  const Cx d = a - b;
  return std::min({std::abs(d), std::abs(d - Cx(0, 2 * kPi)),
                   std::abs(d + Cx(0, 2 * kPi))});
}

// worst per-coordinate deviation between two canonical configurations,
// minimized over the assignment within each level
double config_deviation(const RootConfiguration& a,
                        const RootConfiguration& b) {
  double worst = 0.0;
  for (size_t l = 0; l < a.levels.size(); ++l) {
    const auto& u = a.levels[l];
    const auto& v = b.levels[l];
    if (u.size() != v.size()) return 1e99;
    std::vector<int> idx(u.size());
    std::iota(idx.begin(), idx.end(), 0);
    double best = 1e99;
    do {
      double cost = 0.0;
      for (size_t i = 0; i < u.size(); ++i)
        cost = std::max(cost, circ_dist(u[i], v[idx[i]]));
      best = std::min(best, cost);
    } while (std::next_permutation(idx.begin(), idx.end()));
    worst = std::max(worst, best);
  }
  return worst;
}

// ---------------------------------------------------------------- shared data

struct TableRun {
  const ReferenceTable* tab = nullptr;
  ModelParams p;
  std::vector<BetheSolution> refined;
};
std::vector<TableRun> g_tables;

json g_cells;              // completeness sweep cells (desk scale)
double g_sweep_secs = 0.0;
json g_deep;               // bethe --all report at (3,3,II)
std::vector<BetheSolution> g_deep_sols;  // parsed (3,3,3) sector finds

// ------------------------------------------------------------------ criteria

void c01_identities() {
  const double t0 = now_s();
  double worst = 0.0;
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int n : {1, 2, 3}) {
    for (BoundarySet set : {BoundarySet::I, BoundarySet::II}) {
      const ModelParams p = mk(n, 2, set);
      worst = std::max(worst, r_property_report(p, 10, kSeed).max());

      const Matrix pr = crossing_projector(p);
      worst = std::max(worst, rel_residual(pr * pr, pr));
      worst = std::max(worst, std::abs(pr.trace() - Cx(1.0)));
      Eigen::JacobiSVD<Matrix> svd(pr);
      worst = std::max(worst, svd.singularValues()(1) /
                                  svd.singularValues()(0));

      for (int k = 0; k < 10; ++k) {
        const Cx u(unif(rng), unif(rng));
        const Cx v(unif(rng), unif(rng));
        worst = std::max(worst, bybe_residual(u, v, p));
        worst = std::max(worst, dual_bybe_residual(u, v, p));
        worst = std::max(worst, boundary_identity_fit(u, p).residual);
      }
      worst = std::max(worst, v_sandwich_residual(p));
    }
  }
  record(1, "bulk and boundary identity suite", worst < 1e-9,
         "worst residual " + fmt(worst) + " (tol 1e-9, n<=3, both sets)",
         now_s() - t0);
}

void c02_commuting_family() {
  const double t0 = now_s();
  double worst = 0.0;
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int n : {1, 2}) {
    for (int N : {1, 2, 3}) {
      for (BoundarySet set : {BoundarySet::I, BoundarySet::II}) {
        const ModelParams p = mk(n, N, set);
        const Matrix H = hamiltonian(p);
        for (int k = 0; k < 2; ++k) {
          const Cx u(unif(rng), unif(rng));
          const Cx v(unif(rng), unif(rng));
          const Matrix tu = transfer_matrix(u, p);
          const Matrix tv = transfer_matrix(v, p);
          worst = std::max(worst, comm_res(tu, tv));
          worst = std::max(worst, comm_res(H, tu));
          worst = std::max(worst, comm_res(H, tv));
        }
      }
    }
  }
  record(2, "commuting transfer family", worst < 1e-8,
         "worst residual " + fmt(worst) + " (tol 1e-8, n<=2, N<=3)",
         now_s() - t0);
}

void c03_hamiltonian_from_transfer() {
  const double t0 = now_s();
  double worst = 0.0;
  const double h = 1e-6;
  for (int n : {1, 2}) {
    for (int N : {1, 2}) {
      for (BoundarySet set : {BoundarySet::I, BoundarySet::II}) {
        const ModelParams p = mk(n, N, set);
        const Matrix tp =
            (transfer_matrix(Cx(h, 0), p) - transfer_matrix(Cx(-h, 0), p)) /
            (2.0 * h);
        const NormalizationConstants c = normalization_constants(p);
        const int D = p.state_dim();
        const Matrix hd = tp / c.c1 + c.c2 * Matrix::Identity(D, D);
        worst = std::max(worst, rel_residual(hamiltonian(p), hd));
      }
    }
  }
  record(3, "hamiltonian from transfer derivative", worst < 1e-6,
         "worst relative residual " + fmt(worst) +
             " (tol 1e-6, finite-difference limited)",
         now_s() - t0);
}

void c04_quantum_group() {
  const double t0 = now_s();
  double exact = 0.0;   // must stay literally zero
  double worst9 = 0.0;  // 1e-9 family
  double worst10 = 0.0; // coassociativity
  for (int n : {1, 2, 3}) {
    for (Algebra alg : {Algebra::Bn, Algebra::Cn}) {
      const ModelParams p =
          mk(n, 2, alg == Algebra::Bn ? BoundarySet::I : BoundarySet::II);
      const GeneratorSet g =
          alg == Algebra::Bn ? bn_generators(p) : cn_generators(p);
      const auto roots = simple_roots(alg, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double a = roots[j][i];
          exact = std::max(
              exact,
              (commutator(g.cartan[i], g.raising[j]) - a * g.raising[j])
                  .norm());
          exact = std::max(
              exact,
              (commutator(g.cartan[i], g.lowering[j]) + a * g.lowering[j])
                  .norm());
        }
        if (alg == Algebra::Cn) {
          const double a0 = (i == 0) ? 2.0 : 0.0;
          exact = std::max(exact, (commutator(g.cartan[i], g.extra_raising) -
                                   a0 * g.extra_raising)
                                      .norm());
          exact = std::max(exact, (commutator(g.cartan[i], g.extra_lowering) +
                                   a0 * g.extra_lowering)
                                      .norm());
        }
      }
      if (alg == Algebra::Cn) {
        // single-site commutator ladder must rebuild the short-root pair
        Matrix x = g.extra_raising;
        for (int j = 1; j <= n - 1; ++j)
          x = commutator(commutator(x, g.lowering[j - 1]), g.lowering[j - 1]);
        exact = std::max(
            exact, (std::pow(-0.5, n - 1) * x - g.raising[n - 1]).norm());
      }
      worst9 = std::max(worst9, qrelation_residual(g, p));
      worst10 = std::max(worst10, coassociativity_residual(g, p));
    }
  }
  double sym = 0.0;
  for (int n : {1, 2, 3}) {
    for (int N : {1, 2, 3}) {
      for (BoundarySet set : {BoundarySet::I, BoundarySet::II}) {
        const ModelParams p = mk(n, N, set);
        const GeneratorSet g = set == BoundarySet::I ? bn_generators(p)
                                                     : cn_generators(p);
        sym = std::max(sym,
                       symmetry_residual(nfold_coproduct(g, p, N),
                                         hamiltonian(p)));
      }
    }
  }
  const bool pass =
      exact == 0.0 && worst9 < 1e-9 && worst10 < 1e-10 && sym < 1e-9;
  record(4, "quantum group relations", pass,
         "defining/ladder exact (" + fmt(exact) + "), exchange " +
             fmt(worst9) + ", coassociativity " + fmt(worst10) +
             ", symmetry " + fmt(sym),
         now_s() - t0);
}

void c05_decompositions() {
  const double t0 = now_s();
  using M = std::map<std::vector<int>, long long>;
  auto flat = [](const Decomposition& d) {
    M out;
    for (const auto& [l, k] : d.entries) out[l.labels] = k;
    return out;
  };
  auto dec = [](int n, int N, Algebra alg) {
    ModelParams p;
    p.n = n;
    p.N = N;
    return tensor_power_decompose(p, alg);
  };
  bool ok = true;
  // the two- and three-site decompositions for every rank, both algebras
  ok &= flat(dec(1, 2, Algebra::Bn)) == M{{{0}, 1}, {{2}, 1}, {{4}, 1}};
  ok &= flat(dec(1, 3, Algebra::Bn)) ==
        M{{{0}, 1}, {{2}, 3}, {{4}, 2}, {{6}, 1}};
  ok &= flat(dec(2, 2, Algebra::Bn)) ==
        M{{{0, 0}, 1}, {{0, 2}, 1}, {{2, 0}, 1}};
  ok &= flat(dec(2, 3, Algebra::Bn)) ==
        M{{{1, 0}, 3}, {{0, 2}, 1}, {{3, 0}, 1}, {{1, 2}, 2}};
  ok &= flat(dec(3, 2, Algebra::Bn)) ==
        M{{{0, 0, 0}, 1}, {{0, 1, 0}, 1}, {{2, 0, 0}, 1}};
  ok &= flat(dec(3, 3, Algebra::Bn)) ==
        M{{{1, 0, 0}, 3}, {{0, 0, 2}, 1}, {{3, 0, 0}, 1}, {{1, 1, 0}, 2}};
  ok &= flat(dec(1, 2, Algebra::Cn)) == M{{{0}, 2}, {{1}, 2}, {{2}, 1}};
  ok &= flat(dec(1, 3, Algebra::Cn)) ==
        M{{{0}, 4}, {{1}, 5}, {{2}, 3}, {{3}, 1}};
  ok &= flat(dec(2, 2, Algebra::Cn)) ==
        M{{{0, 0}, 2}, {{1, 0}, 2}, {{0, 1}, 1}, {{2, 0}, 1}};
  ok &= flat(dec(2, 3, Algebra::Cn)) == M{{{0, 0}, 4}, {{1, 0}, 6},
                                          {{0, 1}, 3}, {{2, 0}, 3},
                                          {{1, 1}, 2}, {{3, 0}, 1}};
  ok &= flat(dec(3, 2, Algebra::Cn)) ==
        M{{{0, 0, 0}, 2}, {{1, 0, 0}, 2}, {{0, 1, 0}, 1}, {{2, 0, 0}, 1}};
  ok &= flat(dec(3, 3, Algebra::Cn)) ==
        M{{{0, 0, 0}, 4}, {{1, 0, 0}, 6}, {{0, 1, 0}, 3}, {{0, 0, 1}, 1},
          {{2, 0, 0}, 3}, {{3, 0, 0}, 1}, {{1, 1, 0}, 2}};
  bool sums = true;
  for (Algebra alg : {Algebra::Bn, Algebra::Cn})
    for (int n = 1; n <= 3; ++n)
      for (int N = 1; N <= 3; ++N) {
        long long dim = 1;
        for (int k = 0; k < N; ++k) dim *= 2 * n + 1;
        sums &= dec(n, N, alg).total_dimension() == dim;
      }
  record(5, "tensor power decompositions", ok && sums,
         std::string("pinned two/three-site maps ") +
             (ok ? "match" : "MISMATCH") + ", dimension sums " +
             (sums ? "match" : "MISMATCH") + " (integer equality)",
         now_s() - t0);
}

void c06_table_replication() {
  const double t0 = now_s();
  bool ok = true;
  int nsol = 0;
  double worst_res = 0.0, worst_dev = 0.0;
  std::string why;
  for (const ReferenceTable& tab : reference_tables()) {
    TableRun run;
    run.tab = &tab;
    run.p = mk(tab.n, tab.N,
               tab.algebra == Algebra::Bn ? BoundarySet::I : BoundarySet::II);
    for (const TableRow& row : tab.rows) {
      const IrrepLabel lab = dynkin_label(row.m, run.p, tab.algebra);
      if (lab.labels != row.labels || weyl_dimension(lab) != row.degeneracy ||
          row.multiplicity != static_cast<int>(row.solutions.size())) {
        ok = false;
        why = "label/degeneracy/mult bookkeeping mismatch";
        continue;
      }
      std::vector<size_t> in_row;  // indices into run.refined
      for (const TableSolution& ts : row.solutions) {
        const auto cfg = to_configuration(ts);
        if (!cfg) continue;  // coordinates missing from the table
        ++nsol;
        const auto ref = newton_solve(*cfg, run.p);
        if (!ref) {
          ok = false;
          why = "printed seed diverged";
          continue;
        }
        worst_res = std::max(worst_res, ref->residual);
        const double dev =
            config_deviation(ref->roots, canonicalize(*cfg));
        worst_dev = std::max(worst_dev, dev);
        for (size_t prev : in_row)
          if (same_configuration(run.refined[prev].roots, ref->roots)) {
            ok = false;
            why = "two printed rows refined to one solution";
          }
        in_row.push_back(run.refined.size());
        run.refined.push_back(*ref);
      }
    }
    g_tables.push_back(std::move(run));
  }
  ok = ok && worst_res < 1e-10 && worst_dev <= 1e-5;
  record(6, "reference table replication", ok,
         std::to_string(nsol) + " printed solutions refined, worst residual " +
             fmt(worst_res) + " (tol 1e-10), worst coordinate shift " +
             fmt(worst_dev) + " (tol 1e-5)" + (why.empty() ? "" : "; " + why),
         now_s() - t0);
}

void c08_completeness() {
  // desk-scale sweep through the pipeline command
  double t0 = now_s();
  RunConfig cfg;
  cfg.starts = 6000;
  SweepRange range;
  range.n_lo = 1;
  range.n_hi = 2;
  range.N_lo = 2;
  range.N_hi = 3;
  const CommandResult sweep = cmd_completeness(cfg, range);
  g_cells = sweep.report["cells"];
  g_sweep_secs = now_s() - t0;
  bool desk = sweep.exit_code == kExitPass && g_cells.size() == 8;
  for (const auto& cell : g_cells)
    desk = desk && cell["status"] == "complete" &&
           cell["reconciled"].get<bool>() &&
           cell["dimension_sum_matches"].get<bool>() &&
           cell["unmatched_clusters"].get<long long>() == 0;

  // the hard cell: rank 3, three sites, second set, full sweep; a smaller
  // random budget leaves room for the whole continuation cascade under the
  // per-sector seed cap
  t0 = now_s();
  RunConfig deep;
  deep.n = 3;
  deep.N = 3;
  deep.set = BoundarySet::II;
  deep.all = true;
  deep.starts = 4000;
  const CommandResult res = cmd_bethe(deep);
  g_deep = res.report;
  long long expected = -1, found = -1;
  bool flagged = false;
  for (const auto& sec : res.report["sectors"]) {
    if (sec["m"] != std::vector<int>{3, 3, 3}) continue;
    expected = sec["expected"].is_null() ? -1 : sec["expected"].get<long long>();
    found = sec["found"].get<long long>();
    flagged = sec["incomplete"].get<bool>() == (found < expected);
    for (const auto& js : sec["solutions"]) {
      BetheSolution s;
      for (const auto& lvl : js["roots"]) {
        std::vector<Cx> level;
        for (const auto& u : lvl) level.push_back(cx_from_json(u));
        s.roots.levels.push_back(std::move(level));
      }
      s.energy_value = cx_from_json(js["energy"]);
      g_deep_sols.push_back(std::move(s));
    }
  }
  const bool deep_ok =
      res.exit_code == kExitPass && expected == 4 && found >= 2 && flagged;
  const double deep_secs = now_s() - t0;

  const std::string deep_note =
      found >= expected ? "complete"
                        : (flagged ? "shortfall reported"
                                   : "shortfall NOT reported");
  record(8, "completeness sweep", desk && deep_ok && g_sweep_secs < 600.0,
         "8 desk cells " + std::string(desk ? "complete+reconciled" : "FAILED") +
             " in " + fmt(g_sweep_secs) + "s (cap 600s); hard sector (3,3,3) found " +
             std::to_string(found) + " of " + std::to_string(expected) + ", " +
             deep_note,
         g_sweep_secs + deep_secs);
}

void c07_eigenvalue_crosschecks() {
  const double t0 = now_s();
  double worst_e = 0.0, worst_l = 0.0;
  bool ok = true;
  int checked = 0;
  for (const TableRun& run : g_tables) {
    if (run.refined.empty()) continue;
    const EigResult eh = eig(hamiltonian(run.p));
    const DenseOracle oc = build_dense_oracle(run.p, kProbe1, kProbe2);
    for (const BetheSolution& s : run.refined) {
      ++checked;
      double be = 1e99;
      for (int i = 0; i < eh.values.size(); ++i)
        be = std::min(be, std::abs(s.energy_value - eh.values(i)));
      worst_e = std::max(worst_e, be);
      for (int which : {0, 1}) {
        const Cx lam = transfer_eigenvalue(
            s.roots, which ? kProbe2 : kProbe1, run.p);
        const Vector& ev = which ? oc.ev2 : oc.ev1;
        double bl = 1e99;
        for (int i = 0; i < ev.size(); ++i)
          bl = std::min(bl, std::abs(lam - ev(i)));
        worst_l = std::max(worst_l, bl / std::abs(lam));
      }
    }
    // the hard-cell finds reuse this table's spectra (same parameters)
    if (run.p.n == 3 && run.p.N == 3 && run.p.set == BoundarySet::II) {
      for (const BetheSolution& s : g_deep_sols) {
        ++checked;
        double be = 1e99;
        for (int i = 0; i < eh.values.size(); ++i)
          be = std::min(be, std::abs(s.energy_value - eh.values(i)));
        worst_e = std::max(worst_e, be);
        for (int which : {0, 1}) {
          const Cx lam = transfer_eigenvalue(
              s.roots, which ? kProbe2 : kProbe1, run.p);
          const Vector& ev = which ? oc.ev2 : oc.ev1;
          double bl = 1e99;
          for (int i = 0; i < ev.size(); ++i)
            bl = std::min(bl, std::abs(lam - ev(i)));
          worst_l = std::max(worst_l, bl / std::abs(lam));
        }
      }
    }
  }
  ok = worst_e < 1e-7 && worst_l < 1e-7 && checked > 0;
  record(7, "eigenvalue cross-checks", ok,
         std::to_string(checked) + " solutions vs dense spectra: worst |dE| " +
             fmt(worst_e) + ", worst transfer deviation " + fmt(worst_l) +
             " (tol 1e-7)",
         now_s() - t0);
}

void c09_highest_weight() {
  const double t0 = now_s();
  bool thresh = true;
  for (const auto& cell : g_cells)
    thresh = thresh && cell["reconciled"].get<bool>() &&
             cell["cartan_check"].get<bool>();

  // larger cell, reported as evidence: clustering + kernel counting alone
  // must still reproduce the predicted decomposition at (3,3,II)
  std::string note;
  try {
    const ModelParams p = mk(3, 3, BoundarySet::II);
    const SpectrumReport rep =
        sector_diagonalize(hamiltonian(p), p, Algebra::Cn);
    const bool same = rep.observed.entries == rep.predicted.entries;
    note = std::string("; (3,3,II) observed decomposition ") +
           (same ? "matches prediction" : "DIFFERS from prediction");
  } catch (const std::exception& e) {
    note = std::string("; (3,3,II) evidence unavailable: ") + e.what();
  }
  record(9, "highest-weight structure", thresh,
         std::string("kernel dimension and Cartan labels ") +
             (thresh ? "verified" : "FAILED") +
             " in all 8 reconciled desk cells" + note,
         now_s() - t0);
}

void c10_negative_controls() {
  const double t0 = now_s();
  double herm_I_real = 0.0;        // must stay tiny
  double min_bad = 1e99;           // the non-Hermitian cases
  double min_raise = 1e99;         // B_n raisings against the second set
  for (int n : {1, 2}) {
    ModelParams p = mk(n, 2, BoundarySet::I);
    p.eta = Cx(0.1, 0.0);
    herm_I_real = std::max(herm_I_real, herm_res(hamiltonian(p)));
    p.eta = Cx(0.0, -0.1);
    min_bad = std::min(min_bad, herm_res(hamiltonian(p)));
    ModelParams q = mk(n, 2, BoundarySet::II);
    min_bad = std::min(min_bad, herm_res(hamiltonian(q)));
    q.eta = Cx(0.1, 0.0);
    min_bad = std::min(min_bad, herm_res(hamiltonian(q)));
  }
  for (int n : {1, 2, 3}) {
    const ModelParams p = mk(n, 2, BoundarySet::II);
    const Matrix H = hamiltonian(p);
    const CoproductSet cop = nfold_coproduct(bn_generators(p), p, 2);
    double worst = 0.0;
    for (const Matrix& e : cop.raisingN) worst = std::max(worst, comm_res(H, e));
    min_raise = std::min(min_raise, worst);
  }
  const bool pass = herm_I_real < 1e-12 && min_bad > 1e-6 && min_raise > 1e-3;
  record(10, "symmetry negative controls", pass,
         "first set Hermitian for real eta (" + fmt(herm_I_real) +
             "), non-Hermitian cases >= " + fmt(min_bad) +
             ", wrong-family raising commutators >= " + fmt(min_raise),
         now_s() - t0);
}

}  // namespace

int main() {
  std::fprintf(stderr, "acceptance suite starting\n");
  c01_identities();
  c02_commuting_family();
  c03_hamiltonian_from_transfer();
  c04_quantum_group();
  c05_decompositions();
  c06_table_replication();
  c08_completeness();
  c07_eigenvalue_crosschecks();
  c09_highest_weight();
  c10_negative_controls();

  std::sort(g_lines.begin(), g_lines.end(),
            [](const Line& a, const Line& b) { return a.id < b.id; });
  int failures = 0;
  for (const Line& l : g_lines) {
    if (!l.pass) ++failures;
    std::printf("[%s] %02d %-34s %s (%.1fs)\n", l.pass ? "PASS" : "FAIL",
                l.id, l.name.c_str(), l.detail.c_str(), l.secs);
  }
  std::printf("acceptance: %d/%zu criteria passed\n",
              static_cast<int>(g_lines.size()) - failures, g_lines.size());
  return failures;
}
