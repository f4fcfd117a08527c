#pragma once

#include <stdexcept>

#include "npv/bipoly.hpp"

namespace npv {

// A plane polynomial map f = (P, Q) in coordinates where both components
// are monic in y. The Jacobian is cached since every series evaluation
// needs it.
struct MapPair {
  BiPoly P;
  BiPoly Q;
  BiPoly jac;
  long shear = 0;

  int deg_P() const { return P.degree(); }
  int deg_Q() const { return Q.degree(); }
};

// Apply x -> x + t*y for the least t >= 0 making deg_y = deg for both
// components. Throws std::invalid_argument for constant input.
MapPair normalize_monic(const BiPoly& p, const BiPoly& q);

bool is_monic_in_y(const BiPoly& f);

}  // namespace npv
