#include "a2n2/tables.hpp"

namespace a2n2 {

namespace {

using OC = std::optional<Cx>;
using Lv = std::vector<OC>;

OC re(double x) { return Cx(x, 0.0); }
OC im(double y) { return Cx(0.0, y); }
OC cx(double x, double y) { return Cx(x, y); }
constexpr std::nullopt_t un = std::nullopt;

TableSolution sol(std::vector<Lv> levels) {
  TableSolution s;
  s.roots = std::move(levels);
  return s;
}

TableRow row(std::vector<int> m, std::vector<int> a, long long deg,
             std::vector<TableSolution> sols) {
  TableRow r;
  r.m = std::move(m);
  r.labels = std::move(a);
  r.degeneracy = deg;
  r.multiplicity = static_cast<int>(sols.size());
  r.solutions = std::move(sols);
  return r;
}

ReferenceTable table(Algebra alg, int n, int N, std::vector<TableRow> rows) {
  ReferenceTable t;
  t.algebra = alg;
  t.n = n;
  t.N = N;
  t.rows = std::move(rows);
  return t;
}

std::vector<ReferenceTable> build_all() {
  std::vector<ReferenceTable> all;

  // ---- B series ----

  all.push_back(table(
      Algebra::Bn, 1, 2,
      {row({0}, {4}, 5, {sol({{}})}),
       row({1}, {2}, 3, {sol({{re(0.201347)}})}),
       row({2}, {0}, 1,
           {sol({{cx(0.627218, 1.28621), cx(0.627218, -1.28621)}})})}));

  all.push_back(table(
      Algebra::Bn, 1, 3,
      {row({0}, {6}, 7, {sol({{}})}),
       row({1}, {4}, 5, {sol({{re(0.115986)}}), sol({{re(0.351133)}})}),
       row({2}, {2}, 3,
           {sol({{cx(0.524753, 1.38161), cx(0.524753, -1.38161)}}),
            sol({{re(0.11483), im(1.56044)}}),
            sol({{re(0.343261), im(1.64011)}})}),
       row({3}, {0}, 1,
           {sol({{re(0.115223), re(0.344343), cx(0.324313, kPi)}})})}));

  all.push_back(table(
      Algebra::Bn, 2, 2,
      {row({0, 0}, {2, 0}, 14, {sol({{}, {}})}),
       row({1, 0}, {0, 2}, 10, {sol({{re(0.201347)}, {}})}),
       row({2, 2}, {0, 0}, 1,
           {sol({{cx(0.427307, 0.971435), cx(0.427307, -0.971435)},
                 {cx(0.506682, 1.38565), cx(0.506682, -1.38565)}})})}));

  all.push_back(table(
      Algebra::Bn, 2, 3,
      {row({0, 0}, {3, 0}, 30, {sol({{}, {}})}),
       row({1, 0}, {1, 2}, 35,
           {sol({{re(0.115986)}, {}}), sol({{re(0.351133)}, {}})}),
       row({2, 1}, {0, 2}, 10,
           {sol({{re(0.115986), re(0.351133)}, {re(0.331791)}})}),
       row({2, 2}, {1, 0}, 5,
           {sol({{re(0.338012), im(1.11733)},
                 {cx(0.340113, 1.32976), cx(0.340113, -1.32976)}}),
            sol({{cx(0.390693, 1.11745), cx(0.390693, -1.11745)},
                 {cx(0.434061, 1.4248), cx(0.434061, -1.4248)}}),
            sol({{re(0.113154), im(1.01242)},
                 {cx(0.410526, 1.3294), cx(0.410526, -1.3294)}})})}));

  all.push_back(table(
      Algebra::Bn, 3, 2,
      {row({0, 0, 0}, {2, 0, 0}, 27, {sol({{}, {}, {}})}),
       row({1, 0, 0}, {0, 1, 0}, 21, {sol({{re(0.201347)}, {}, {}})}),
       row({2, 2, 2}, {0, 0, 0}, 1,
           {sol({{cx(0.327207, 0.786874), cx(0.327207, -0.786874)},
                 {cx(0.372666, 1.12783), cx(0.372666, -1.12783)},
                 {cx(0.415697, 1.42783), cx(0.415697, -1.42783)}})})}));

  all.push_back(table(
      Algebra::Bn, 3, 3,
      {row({0, 0, 0}, {3, 0, 0}, 77, {sol({{}, {}, {}})}),
       row({1, 0, 0}, {1, 1, 0}, 105,
           {sol({{re(0.115986)}, {}, {}}), sol({{re(0.351133)}, {}, {}})}),
       row({2, 1, 0}, {0, 0, 2}, 35,
           {sol({{re(0.115986), re(0.351133)}, {re(0.331791)}, {}})}),
       row({2, 2, 2}, {1, 0, 0}, 7,
           {sol({{re(0.110446), im(0.776613)},
                 {cx(0.287874, 1.03712), cx(0.287874, -1.03712)},
                 {cx(0.387205, 1.40363), cx(0.387205, -1.40363)}}),
            sol({{re(0.335123), im(0.905482)},
                 {cx(0.186397, 1.03899), cx(0.186397, -1.03899)},
                 {cx(0.327378, 1.40468), cx(0.327378, -1.40468)}}),
            sol({{cx(0.308473, 0.927961), cx(0.308473, -0.927961)},
                 {cx(0.333096, 1.19533), cx(0.333096, -1.19533)},
                 {cx(0.358468, 1.44765), cx(0.358468, -1.44765)}})})}));

  // ---- C series ----

  all.push_back(table(
      Algebra::Cn, 1, 2,
      {row({0}, {2}, 3, {sol({{}})}),
       row({1}, {1}, 2, {sol({{re(0.185137)}}), sol({{re(1.04997)}})}),
       row({2}, {0}, 1,
           {sol({{cx(0.757565, 0.363991), cx(0.757565, -0.363991)}}),
            sol({{re(0.206122), im(2.59788)}})})}));

  all.push_back(table(
      Algebra::Cn, 1, 3,
      {row({0}, {3}, 4, {sol({{}})}),
       row({1}, {2}, 3,
           {sol({{re(0.111524)}}), sol({{re(0.315352)}}),
            sol({{re(1.38581)}})}),
       row({2}, {1}, 2,
           {sol({{cx(1.10381, 0.414939), cx(1.10381, -0.414939)}}),
            sol({{re(0.116934), re(0.776633)}}),
            sol({{re(0.454616), re(0.531061)}}),
            sol({{re(0.117801), im(2.59116)}}),
            sol({{re(0.369036), im(2.73713)}})}),
       row({3}, {0}, 1,
           {sol({{re(0.886562), cx(0.777865, 0.638435),
                  cx(0.777865, -0.638435)}}),
            sol({{re(0.417895), re(0.773051), im(2.5569)}}),
            sol({{re(0.119916), re(0.88464), im(2.47305)}}),
            sol({{re(0.113539), re(0.333831), cx(0.365549, kPi)}})})}));

  all.push_back(table(
      Algebra::Cn, 2, 2,
      {row({0, 0}, {2, 0}, 10, {sol({{}, {}})}),
       row({1, 0}, {0, 1}, 5, {sol({{re(0.201347)}, {}})}),
       row({1, 1}, {1, 0}, 4,
           {sol({{re(1.18368)}, {re(1.35557)}}),
            sol({{re(0.18784)}, {re(0.716566)}})}),
       row({2, 2}, {0, 0}, 1,
           {sol({{cx(0.844939, 0.400816), cx(0.844939, -0.400816)},
                 {cx(1.07213, 0.422759), cx(1.07213, -0.422759)}}),
            sol({{re(0.211755), im(1.48557)},
                 {im(0.714804), im(2.1946)}})})}));

  all.push_back(table(
      Algebra::Cn, 2, 3,
      {row({0, 0}, {3, 0}, 20, {sol({{}, {}})}),
       row({1, 0}, {1, 1}, 16,
           {sol({{re(0.115986)}, {}}), sol({{re(0.351133)}, {}})}),
       row({1, 1}, {2, 0}, 10,
           {sol({{re(1.58467)}, {re(1.70996)}}),
            sol({{re(0.321003)}, {re(0.760756)}}),
            sol({{re(0.112316)}, {re(0.701168)}})}),
       row({2, 1}, {0, 1}, 5,
           {sol({{re(0.382283), re(0.963791)}, {re(1.34441)}}),
            sol({{re(0.118089), re(1.05603)}, {re(1.3902)}}),
            sol({{re(0.113785), re(0.333555)}, {re(0.2923)}})}),
       row({2, 2}, {1, 0}, 4,
           {sol({{re(0.397606), re(0.688759)},
                 {cx(0.9169, 0.307663), cx(0.9169, -0.307663)}}),
            sol({{cx(1.23957, 0.466025), cx(1.23957, -0.466025)},
                 {cx(1.39288, 0.481069), cx(1.39288, -0.481069)}}),
            sol({{re(0.119249), im(1.66217)},
                 {im(0.711593), im(2.20269)}}),
            sol({{re(0.116831), re(0.865494)},
                 {cx(0.934114, 0.250442), cx(0.934114, -0.250442)}}),
            sol({{re(0.385256), im(1.71269)}, {im(0.61563), im(2.28518)}}),
            sol({{re(0.117124), re(0.362471)},
                 {re(0.34741), im(2.68405)}})}),
       row({3, 3}, {0, 0}, 1,
           {sol({{re(0.989238), cx(0.860023, 0.700064),
                  cx(0.860023, -0.700064)},
                 {re(1.18442), cx(1.06721, 0.745089),
                  cx(1.06721, -0.745089)}}),
            sol({{re(0.425069), re(0.848958), im(1.5453)},
                 {re(1.13679), im(0.680288), im(2.20976)}}),
            sol({{re(0.113851), re(0.338372), im(1.44183)},
                 {cx(0.279454, 0.211351), cx(0.279454, -0.211351),
                  im(2.39497)}}),
            sol({{re(0.120953), re(0.94247), im(1.51754)},
                 {re(1.1893), im(0.757077), im(2.14786)}})})}));

  all.push_back(table(
      Algebra::Cn, 3, 2,
      {row({0, 0, 0}, {2, 0, 0}, 21, {sol({{}, {}, {}})}),
       row({1, 0, 0}, {0, 1, 0}, 14, {sol({{re(0.201347)}, {}, {}})}),
       row({1, 1, 1}, {1, 0, 0}, 6,
           {sol({{re(0.190268)}, {re(0.796966)}, {re(1.04547)}}),
            sol({{re(1.35599)}, {re(1.55753)}, {re(1.68531)}})}),
       row({2, 2, 2}, {0, 0, 0}, 1,
           {sol({{cx(0.9507, 0.448287), cx(0.9507, -0.448287)},
                 {cx(1.21099, 0.473011), cx(1.21099, -0.473011)},
                 {cx(1.36739, 0.485421), cx(1.36739, -0.485421)}}),
            sol({{re(0.219256), im(1.14053)},
                 {im(0.543566), im(1.60164)},
                 {im(0.885636), im(2.04527)}})})}));

  all.push_back(table(
      Algebra::Cn, 3, 3,
      {row({0, 0, 0}, {3, 0, 0}, 56, {sol({{}, {}, {}})}),
       row({1, 0, 0}, {1, 1, 0}, 64,
           {sol({{re(0.115986)}, {}, {}}), sol({{re(0.351133)}, {}, {}})}),
       row({1, 1, 1}, {2, 0, 0}, 21,
           {sol({{re(0.113011)}, {re(0.78232)}, {re(1.03469)}}),
            sol({{re(0.326182)}, {re(0.839331)}, {re(1.07712)}}),
            sol({{re(1.86199)}, {re(2.01428)}, {re(2.10901)}})}),
       row({2, 1, 0}, {0, 0, 1}, 14,
           {sol({{re(0.115986), re(0.351133)}, {re(0.331791)}, {}})}),
       row({2, 1, 1}, {0, 1, 0}, 14,
           {sol({{re(0.117608), re(1.20956)}, {re(1.58891)}, {re(1.71382)}}),
            sol({{re(0.11417), re(0.336229)}, {re(0.298556)},
                 {re(0.751895)}}),
            sol({{re(0.372422), re(1.13284)}, {re(1.54735)},
                 {re(1.67608)}})}),
       row({2, 2, 2}, {1, 0, 0}, 6,
           {sol({{re(0.377177), re(0.835326)},
                 {cx(1.03506, 0.320648), cx(1.03506, -0.320648)},
                 {cx(1.23102, 0.37667), cx(1.23102, -0.37667)}}),
            sol({{cx(1.41135, 0.538002), cx(1.41135, -0.538002)},
                 {cx(1.59277, 0.555019), cx(1.59277, -0.555019)},
                 {cx(1.70587, 0.566549), cx(1.70587, -0.566549)}}),
            sol({{re(0.409958), im(1.35937)},
                 {im(0.414206), im(1.74096)},
                 {im(0.791369), im(2.1359)}}),
            sol({{re(0.116641), re(0.980323)},
                 {cx(1.05068, 0.260276), cx(1.05068, -0.260276)},
                 {cx(1.24798, 0.342251), cx(1.24798, -0.342251)}}),
            sol({{re(0.118386), re(0.376545)},
                 {re(0.367), im(1.49213)},
                 {im(0.65911), im(2.2416)}}),
            sol({{re(0.121155), im(1.30785)},
                 {im(0.572787), im(1.67608)},
                 {im(0.885614), im(2.04744)}})}),
       row({3, 3, 3}, {0, 0, 0}, 1,
           {sol({{re(0.443222), re(0.937877), im(1.23794)},
                 {re(1.24501), im(0.44955), im(1.66845)},
                 {re(1.41773), im(0.832685), im(2.09128)}}),
            sol({{re(1.11346), cx(0.953596, 0.779036),
                  cx(0.953596, -0.779036)},
                 {re(1.3403), cx(1.18988, 0.830487),
                  cx(1.18988, -0.830487)},
                 {re(1.47811), cx(1.32949, 0.861223),
                  cx(1.32949, -0.861223)}}),
            sol({{un, un, un}, {un, un, un}, {un, un, un}}),
            sol({{un, un, un}, {un, un, un}, {un, un, un}})})}));

  return all;
}

}  // namespace

bool TableSolution::known() const {
  for (const auto& level : roots)
    for (const auto& u : level)
      if (!u) return false;
  return true;
}

std::optional<RootConfiguration> to_configuration(const TableSolution& s) {
  RootConfiguration r;
  for (const auto& level : s.roots) {
    std::vector<Cx> out;
    for (const auto& u : level) {
      if (!u) return std::nullopt;
      out.push_back(*u);
    }
    r.levels.push_back(std::move(out));
  }
  return r;
}

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> all = build_all();
  return all;
}

const ReferenceTable* find_table(Algebra alg, int n, int N) {
  for (const ReferenceTable& t : reference_tables())
    if (t.algebra == alg && t.n == n && t.N == N) return &t;
  return nullptr;
}

}  // namespace a2n2
