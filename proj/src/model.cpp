#include "a2n2/model.hpp"

namespace a2n2 {

Algebra algebra_for(BoundarySet set) {
  return set == BoundarySet::I ? Algebra::Bn : Algebra::Cn;
}

std::string to_string(BoundarySet set) {
  return set == BoundarySet::I ? "I" : "II";
}

std::string to_string(Algebra alg) { return alg == Algebra::Bn ? "Bn" : "Cn"; }

BoundarySet boundary_set_from_string(const std::string& s) {
  if (s == "I" || s == "i" || s == "1") return BoundarySet::I;
  if (s == "II" || s == "ii" || s == "2") return BoundarySet::II;
  throw ConfigError("unknown boundary set: " + s);
}

}  // namespace a2n2
