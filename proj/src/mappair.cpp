#include "npv/mappair.hpp"

namespace npv {

bool is_monic_in_y(const BiPoly& f) { return !f.is_zero() && f.degree_y() == f.degree(); }

MapPair normalize_monic(const BiPoly& p, const BiPoly& q) {
  if (p.is_constant() || q.is_constant()) {
    throw std::invalid_argument("normalize_monic: both components must be nonconstant");
  }
  // The y^d coefficient of F_d(x + t*y, y) is F_d(t, 1), a nonzero polynomial
  // in t of degree <= d, so some t <= deg P + deg Q works for both.
  const long limit = p.degree() + q.degree() + 1;
  for (long t = 0; t <= limit; ++t) {
    BiPoly ps = p.shear(t);
    BiPoly qs = q.shear(t);
    if (is_monic_in_y(ps) && is_monic_in_y(qs)) {
      BiPoly jac = jacobian(ps, qs);
      return MapPair{std::move(ps), std::move(qs), std::move(jac), t};
    }
  }
  throw std::logic_error("normalize_monic: no shear found within the degree bound");
}

}  // namespace npv
