#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "npv/mappair.hpp"
#include "npv/parse.hpp"
#include "npv/puiseux.hpp"
#include "npv/unipoly.hpp"

namespace npv::testing {

inline MapPair map_of(std::string_view text) {
  auto [p, q] = parse_map(text);
  return normalize_monic(p, q);
}

inline ParamSeries series(std::string_view text) { return parse_series(text); }

// Coefficients constant term first.
inline UniPoly uni(std::initializer_list<Scalar> coeffs) { return UniPoly(std::vector<Scalar>(coeffs)); }

inline LeadingData lead_of(UniPoly p, long a, UniPoly q, long b, UniPoly j, long J = 0, long mult = 1,
                           long param_k = 0) {
  LeadingData out;
  out.p = std::move(p);
  out.a = a;
  out.q = std::move(q);
  out.b = b;
  out.j = std::move(j);
  out.J = J;
  out.mult = mult;
  out.param_k = param_k;
  return out;
}

}  // namespace npv::testing
