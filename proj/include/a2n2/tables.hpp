#pragma once

// Curated reference data for the twelve small cases at eta = -0.1i: for each
// admissible occupation that actually occurs, the Dynkin labels, irrep
// dimension, solution count, and the root configurations themselves (a few
// coordinates were never pinned down and are stored as unknown).

#include <optional>
#include <vector>

#include "a2n2/bethe.hpp"
#include "a2n2/model.hpp"

namespace a2n2 {

struct TableSolution {
  // roots[l-1] lists level-l roots; nullopt marks a missing coordinate
  std::vector<std::vector<std::optional<Cx>>> roots;

  bool known() const;
};

// Strips the optionals; nullopt result if any coordinate is unknown.
std::optional<RootConfiguration> to_configuration(const TableSolution& s);

struct TableRow {
  std::vector<int> m;
  std::vector<int> labels;
  long long degeneracy = 0;
  int multiplicity = 0;
  std::vector<TableSolution> solutions;  // one per expected multiplicity
};

struct ReferenceTable {
  Algebra algebra;
  int n = 1;
  int N = 1;
  std::vector<TableRow> rows;
};

const std::vector<ReferenceTable>& reference_tables();
const ReferenceTable* find_table(Algebra alg, int n, int N);

}  // namespace a2n2
