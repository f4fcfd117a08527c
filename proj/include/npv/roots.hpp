#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "npv/unipoly.hpp"

namespace npv {

// A polynomial factor whose roots are not Gaussian rationals. The engine
// only represents Q(i), so callers either record the factor as an
// unexpandable leaf or drop to cardinality-only bookkeeping.
class ExtensionRequired : public std::runtime_error {
 public:
  explicit ExtensionRequired(UniPoly factor);
  const UniPoly& factor() const { return factor_; }

 private:
  UniPoly factor_;
};

struct RootFactorization {
  // Distinct roots in canonical Scalar order, each with its multiplicity.
  std::vector<std::pair<Scalar, int>> roots;
  // Monic squarefree factors of degree >= 2 with no root in Q(i).
  std::vector<UniPoly> unresolved;

  bool complete() const { return unresolved.empty(); }
};

// All roots of p in Q(i). Linear and quadratic pieces are solved exactly;
// higher-degree pieces are searched by numeric isolation followed by exact
// verification of the rounded Gaussian-rational candidates.
RootFactorization gaussian_roots(const UniPoly& p);

// Same, but throws ExtensionRequired on the first unresolved factor.
std::vector<std::pair<Scalar, int>> gaussian_roots_or_throw(const UniPoly& p);

}  // namespace npv
