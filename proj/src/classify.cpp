#include "npv/classify.hpp"

#include <algorithm>

namespace npv {

SeriesClass classify(const LeadingData& lead) {
  SeriesClass c;
  c.horizontal_P = lead.a == 0 && lead.p.degree() > 0;
  c.horizontal_Q = lead.b == 0 && lead.q.degree() > 0;
  c.dicritical = (c.horizontal_P || c.horizontal_Q) && std::max(lead.a, lead.b) == 0;
  c.singular = lead.j.degree() > 0;
  return c;
}

DeltaData delta(const LeadingData& lead) {
  DeltaData d;
  d.delta = Scalar(lead.a) * lead.p * lead.q.derivative() - Scalar(lead.b) * lead.p.derivative() * lead.q;
  d.mj = Scalar(lead.mult) * lead.j;
  d.exponent_lhs = lead.a + lead.b;
  d.exponent_rhs = 2 * lead.mult - lead.param_k + lead.J;
  return d;
}

}  // namespace npv
