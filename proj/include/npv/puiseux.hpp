#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "npv/bipoly.hpp"
#include "npv/mappair.hpp"
#include "npv/unipoly.hpp"

namespace npv {

// Fractional-power terms keyed by x-exponent, highest exponent first.
using TermMap = std::map<Rational, Scalar, std::greater<Rational>>;

struct SeriesStep {
  long k = 0;
  Scalar coeff;
  friend bool operator==(const SeriesStep&, const SeriesStep&) = default;
};

// phi(x, s) = sum_k a_k x^(1 - k/m) + s * x^(1 - n/m), a finite window of
// Newton-Puiseux series at infinity with a free parameter s in the last slot.
// The multiplicity m is canonical: gcd(m, n, every k with a_k != 0) == 1.
class ParamSeries {
 public:
  // Fixed terms must all lie strictly above the parameter exponent, and no
  // exponent may exceed 1. Zero coefficients are dropped.
  ParamSeries(const TermMap& terms, Rational param_exponent);
  // From the (m, steps, n) form; renormalizes m.
  static ParamSeries from_steps(long mult, const std::vector<SeriesStep>& steps, long param_k);
  // s*x, the window containing every branch at infinity.
  static ParamSeries root();

  long mult() const { return mult_; }
  long param_k() const { return param_k_; }
  const std::vector<SeriesStep>& steps() const { return steps_; }
  const TermMap& terms() const { return terms_; }
  const Rational& param_exponent() const { return param_exponent_; }
  Rational exponent_of(long k) const;
  // Coefficient of the fixed part at an exponent (zero if absent).
  Scalar coeff_at(const Rational& exponent) const;

  // "-x + s*x^(-1)"; parses back with parse_series.
  std::string to_string() const;

  friend bool operator==(const ParamSeries& a, const ParamSeries& b) {
    return a.terms_ == b.terms_ && a.param_exponent_ == b.param_exponent_;
  }
  friend bool operator!=(const ParamSeries& a, const ParamSeries& b) { return !(a == b); }

 private:
  TermMap terms_;
  Rational param_exponent_;
  long mult_ = 1;
  long param_k_ = 0;
  std::vector<SeriesStep> steps_;
};

// A Newton-Puiseux root at infinity y(x) = sum c_k x^(1 - k/m). Terms with
// exponent >= cutoff are exact; below the cutoff nothing is known. An absent
// cutoff means the branch is a finite (exact) root.
class ConcreteBranch {
 public:
  ConcreteBranch(TermMap terms, std::optional<Rational> cutoff);

  const TermMap& terms() const { return terms_; }
  const std::optional<Rational>& cutoff() const { return cutoff_; }
  bool exact() const { return !cutoff_.has_value(); }
  long mult() const { return mult_; }
  std::vector<SeriesStep> steps() const;
  // (1 - cutoff) * m, the order past which terms are unknown; nullopt = infinity.
  std::optional<Rational> truncation_k() const;
  Scalar coeff_at(const Rational& exponent) const;
  std::string to_string() const;

  friend bool operator==(const ConcreteBranch& a, const ConcreteBranch& b) {
    return a.terms_ == b.terms_ && a.cutoff_ == b.cutoff_;
  }

 private:
  TermMap terms_;
  std::optional<Rational> cutoff_;
  long mult_ = 1;
};

// Leading behaviour of P, Q and J(P,Q) along a series: each F(x, phi(x,s))
// equals poly(s) * x^(exp/m) + lower terms in x.
struct LeadingData {
  UniPoly p;
  long a = 0;
  UniPoly q;
  long b = 0;
  UniPoly j;
  long J = 0;
  long mult = 1;
  long param_k = 0;  // n of the series, needed by exponent identities
};

// F(t^M, phi) for t = x^(1/M), as a Laurent polynomial in t with
// coefficients in Q(i)[s]. Exact; no truncation happens.
struct Expansion {
  long denom = 1;
  std::map<long, UniPoly> coeffs;  // nonzero coefficients only

  bool is_zero() const { return coeffs.empty(); }
  long lead_exponent() const { return coeffs.rbegin()->first; }
  const UniPoly& lead_coeff() const { return coeffs.rbegin()->second; }
};

// denom must make every exponent an integer multiple of 1/denom; pass 0 to
// use the least such value.
Expansion expand(const BiPoly& f, const TermMap& fixed, const Rational& param_exponent,
                 long denom = 0);
// F(x, T(x)) for a series with no parameter term.
Expansion expand_fixed(const BiPoly& f, const TermMap& fixed, long denom = 0);

// Leading coefficient polynomial and exponent numerator over phi.mult().
// Throws std::invalid_argument for F == 0.
std::pair<UniPoly, long> substitute(const BiPoly& f, const ParamSeries& phi);

// Throws std::invalid_argument if J(P,Q) vanishes identically.
LeadingData leading_data(const MapPair& f, const ParamSeries& phi);

// Fix the parameter of psi to c and open a new parameter slot at a
// strictly lower exponent. Throws std::invalid_argument otherwise.
ParamSeries refine(const ParamSeries& psi, const Scalar& c, const Rational& next_exponent);
ParamSeries refine(const ParamSeries& psi, const Scalar& c, long next_k, long next_mult);

struct RefinementWitness {
  bool holds = false;
  // phi = psi(x, c + lower terms); nullopt when phi == psi.
  std::optional<Scalar> c;
  // Fixed terms of phi strictly between the two parameter exponents.
  TermMap intermediate;
};

RefinementWitness is_refinement(const ParamSeries& psi, const ParamSeries& phi);

// phi truncated to the terms above alpha, with the parameter moved to
// x^alpha. Requires phi.param_exponent() <= alpha <= 1.
ParamSeries prefix_at(const ParamSeries& phi, const Rational& alpha);

// ---- Newton polygon of F along y = T(x) + Y ----

// Orders of the Taylor coefficients G_j(x) = (1/j!) d^jF/dy^j (x, T(x)),
// j = 0..deg_y F, as x-exponents (nullopt when G_j == 0).
struct TaylorWindow {
  std::vector<std::optional<Rational>> order;
  std::vector<Scalar> lead;  // leading coefficient of G_j (zero if absent)
};

TaylorWindow taylor_window(const BiPoly& f, const TermMap& fixed);

struct PolygonValue {
  Rational exponent;  // max_j (o_j + j*alpha)
  int j_min = 0;      // smallest j attaining the max
  int j_max = 0;      // largest j attaining the max
  bool monomial() const { return j_min == j_max; }
};

// Requires at least one nonzero G_j, which holds for every F != 0.
PolygonValue polygon_value(const TaylorWindow& w, const Rational& alpha);
// Exponents alpha < upper where at least two j attain the max, descending.
std::vector<Rational> polygon_breakpoints(const TaylorWindow& w, const Rational& upper);
// Exponents alpha < upper where the max is 0 and attained by some j > 0.
std::vector<Rational> polygon_horizontal_points(const TaylorWindow& w, const Rational& upper);

std::string exponent_to_string(const Rational& e);
std::string terms_to_string(const TermMap& terms);

}  // namespace npv
