#pragma once

#include "npv/puiseux.hpp"

namespace npv {

struct SeriesClass {
  bool horizontal_P = false;
  bool horizontal_Q = false;
  bool dicritical = false;
  bool singular = false;
};

// Flags read directly off the leading data. A constant leading polynomial
// never makes a series horizontal.
SeriesClass classify(const LeadingData& lead);

struct DeltaData {
  UniPoly delta;       // a*p*q' - b*p'*q
  UniPoly mj;          // m*j
  long exponent_lhs;   // a + b
  long exponent_rhs;   // 2m - n + J
};

DeltaData delta(const LeadingData& lead);

}  // namespace npv
