#include "npv/puiseux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace npv {

namespace {

template <class C>
using Laurent = std::map<long, C>;

template <class C>
void add_into(Laurent<C>& acc, long e, const C& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

template <class C>
Laurent<C> mul(const Laurent<C>& a, const Laurent<C>& b) {
  Laurent<C> out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) add_into(out, ea + eb, ca * cb);
  }
  return out;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("exponent denominator overflow");
  return z.get_si();
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

long natural_denom(const TermMap& terms, const std::optional<Rational>& param) {
  long m = 1;
  for (const auto& [e, c] : terms) m = lcm_long(m, to_long(e.get_den()));
  if (param) m = lcm_long(m, to_long(param->get_den()));
  return m;
}

long scaled_exponent(const Rational& e, long denom) {
  Rational scaled = e * denom;
  if (scaled.get_den() != 1) throw std::invalid_argument("exponent not a multiple of 1/denom");
  return to_long(scaled.get_num());
}

Expansion expand_impl(const BiPoly& f, const TermMap& fixed, const std::optional<Rational>& param,
                      long denom) {
  const long m = denom > 0 ? denom : natural_denom(fixed, param);
  Laurent<UniPoly> y;
  for (const auto& [e, c] : fixed) add_into(y, scaled_exponent(e, m), UniPoly(c));
  if (param) add_into(y, scaled_exponent(*param, m), UniPoly::monomial(Scalar(1), 1));

  const int dy = f.degree_y();
  std::vector<Laurent<UniPoly>> by_y(static_cast<size_t>(std::max(dy, 0)) + 1);
  for (const auto& [mono, c] : f.terms()) add_into(by_y[mono.y], m * mono.x, UniPoly(c));

  Laurent<UniPoly> acc;
  for (int b = dy; b >= 0; --b) {
    acc = mul(acc, y);
    for (const auto& [e, c] : by_y[b]) add_into(acc, e, c);
  }
  return Expansion{m, std::move(acc)};
}

Scalar binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(Rational(r));
}

std::string format_terms(const std::vector<std::pair<Scalar, std::string>>& items) {
  std::string out;
  for (const auto& [c, mono] : items) {
    std::string cs = c.to_string();
    const bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) cs = "(" + cs + ")";
    const bool negative = !compound && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (!out.empty()) {
      out += negative ? " - " : " + ";
    } else if (negative) {
      out += "-";
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::string x_power(const Rational& e) {
  if (sgn(e) == 0) return "";
  if (e == 1) return "x";
  if (e.get_den() == 1 && sgn(e) > 0) return "x^" + e.get_str();
  return "x^(" + e.get_str() + ")";
}

}  // namespace

std::string exponent_to_string(const Rational& e) { return e.get_str(); }

std::string terms_to_string(const TermMap& terms) {
  std::vector<std::pair<Scalar, std::string>> items;
  for (const auto& [e, c] : terms) items.emplace_back(c, x_power(e));
  return format_terms(items);
}

// ---- ParamSeries ----

ParamSeries::ParamSeries(const TermMap& terms, Rational param_exponent)
    : param_exponent_(std::move(param_exponent)) {
  param_exponent_.canonicalize();
  if (param_exponent_ > 1) throw std::invalid_argument("parameter exponent exceeds 1");
  for (const auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    if (e > 1) throw std::invalid_argument("series exponent exceeds 1");
    if (e <= param_exponent_) {
      throw std::invalid_argument("fixed terms must lie above the parameter exponent");
    }
    terms_.emplace(e, c);
  }
  mult_ = natural_denom(terms_, param_exponent_);
  for (const auto& [e, c] : terms_) {
    steps_.push_back(SeriesStep{scaled_exponent(Rational(1 - e), mult_), c});
  }
  param_k_ = scaled_exponent(Rational(1 - param_exponent_), mult_);
}

ParamSeries ParamSeries::from_steps(long mult, const std::vector<SeriesStep>& steps, long param_k) {
  if (mult <= 0) throw std::invalid_argument("multiplicity must be positive");
  if (param_k < 0) throw std::invalid_argument("parameter order must be non-negative");
  TermMap terms;
  for (const auto& s : steps) {
    if (s.k < 0 || s.k >= param_k) throw std::invalid_argument("step order out of range");
    Rational e(1 - ratio(s.k, mult));
    if (terms.count(e) != 0) throw std::invalid_argument("duplicate step order");
    terms.emplace(e, s.coeff);
  }
  return ParamSeries(terms, Rational(1 - ratio(param_k, mult)));
}

ParamSeries ParamSeries::root() { return ParamSeries(TermMap{}, Rational(1)); }

Rational ParamSeries::exponent_of(long k) const { return Rational(1 - ratio(k, mult_)); }

Scalar ParamSeries::coeff_at(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::string ParamSeries::to_string() const {
  std::vector<std::pair<Scalar, std::string>> items;
  for (const auto& [e, c] : terms_) items.emplace_back(c, x_power(e));
  std::string param = "s";
  if (std::string xp = x_power(param_exponent_); !xp.empty()) param += "*" + xp;
  items.emplace_back(Scalar(1), param);
  return format_terms(items);
}

// ---- ConcreteBranch ----

ConcreteBranch::ConcreteBranch(TermMap terms, std::optional<Rational> cutoff)
    : cutoff_(std::move(cutoff)) {
  for (auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    if (cutoff_ && e < *cutoff_) continue;
    terms_.emplace(e, c);
  }
  mult_ = natural_denom(terms_, std::nullopt);
}

std::vector<SeriesStep> ConcreteBranch::steps() const {
  std::vector<SeriesStep> out;
  for (const auto& [e, c] : terms_) out.push_back(SeriesStep{scaled_exponent(Rational(1 - e), mult_), c});
  return out;
}

std::optional<Rational> ConcreteBranch::truncation_k() const {
  if (!cutoff_) return std::nullopt;
  return Rational((1 - *cutoff_) * mult_);
}

Scalar ConcreteBranch::coeff_at(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::string ConcreteBranch::to_string() const {
  std::string out = terms_to_string(terms_);
  if (cutoff_) {
    // first exponent past the known terms
    const Rational next = *cutoff_ - ratio(1, mult_);
    out += " + O(" + (sgn(next) == 0 ? std::string("1") : x_power(next)) + ")";
  }
  return out;
}

// ---- substitution ----

Expansion expand(const BiPoly& f, const TermMap& fixed, const Rational& param_exponent, long denom) {
  return expand_impl(f, fixed, param_exponent, denom);
}

Expansion expand_fixed(const BiPoly& f, const TermMap& fixed, long denom) {
  return expand_impl(f, fixed, std::nullopt, denom);
}

std::pair<UniPoly, long> substitute(const BiPoly& f, const ParamSeries& phi) {
  if (f.is_zero()) throw std::invalid_argument("substitute: polynomial is identically zero");
  Expansion e = expand(f, phi.terms(), phi.param_exponent(), phi.mult());
  // The parameter term is algebraically independent of x, so a nonzero F
  // never vanishes along phi.
  if (e.is_zero()) throw std::logic_error("substitute: nonzero polynomial vanished along a series");
  return {e.lead_coeff(), e.lead_exponent()};
}

LeadingData leading_data(const MapPair& f, const ParamSeries& phi) {
  if (f.jac.is_zero()) {
    throw std::invalid_argument("leading_data: J(P,Q) vanishes identically (degenerate pair)");
  }
  LeadingData out;
  std::tie(out.p, out.a) = substitute(f.P, phi);
  std::tie(out.q, out.b) = substitute(f.Q, phi);
  std::tie(out.j, out.J) = substitute(f.jac, phi);
  out.mult = phi.mult();
  out.param_k = phi.param_k();
  return out;
}

ParamSeries refine(const ParamSeries& psi, const Scalar& c, const Rational& next_exponent) {
  if (next_exponent >= psi.param_exponent()) {
    throw std::invalid_argument("refine: the new parameter exponent must decrease");
  }
  TermMap terms = psi.terms();
  if (!c.is_zero()) terms.emplace(psi.param_exponent(), c);
  return ParamSeries(terms, next_exponent);
}

ParamSeries refine(const ParamSeries& psi, const Scalar& c, long next_k, long next_mult) {
  if (next_mult <= 0) throw std::invalid_argument("refine: multiplicity must be positive");
  return refine(psi, c, Rational(1 - ratio(next_k, next_mult)));
}

RefinementWitness is_refinement(const ParamSeries& psi, const ParamSeries& phi) {
  RefinementWitness w;
  const Rational& e_psi = psi.param_exponent();
  const Rational& e_phi = phi.param_exponent();
  if (e_phi > e_psi) return w;
  // Above psi's parameter slot the fixed parts must coincide.
  TermMap above;
  for (const auto& [e, c] : phi.terms()) {
    if (e > e_psi) above.emplace(e, c);
  }
  if (above != psi.terms()) return w;
  if (e_phi == e_psi) {
    w.holds = phi == psi;
    return w;
  }
  w.holds = true;
  w.c = phi.coeff_at(e_psi);
  for (const auto& [e, c] : phi.terms()) {
    if (e < e_psi) w.intermediate.emplace(e, c);
  }
  return w;
}

ParamSeries prefix_at(const ParamSeries& phi, const Rational& alpha) {
  if (alpha < phi.param_exponent() || alpha > 1) {
    throw std::invalid_argument("prefix_at: exponent outside the series range");
  }
  if (alpha == phi.param_exponent()) return phi;
  TermMap terms;
  for (const auto& [e, c] : phi.terms()) {
    if (e > alpha) terms.emplace(e, c);
  }
  return ParamSeries(terms, alpha);
}

// ---- Newton polygon ----

TaylorWindow taylor_window(const BiPoly& f, const TermMap& fixed) {
  const long m = natural_denom(fixed, std::nullopt);
  Laurent<Scalar> t;
  for (const auto& [e, c] : fixed) add_into(t, scaled_exponent(e, m), c);

  const int dy = std::max(f.degree_y(), 0);
  std::vector<Laurent<Scalar>> powers{Laurent<Scalar>{{0, Scalar(1)}}};
  for (int k = 1; k <= dy; ++k) powers.push_back(mul(powers.back(), t));

  std::vector<Laurent<Scalar>> g(static_cast<size_t>(dy) + 1);
  for (const auto& [mono, c] : f.terms()) {
    for (int j = 0; j <= mono.y; ++j) {
      const Scalar factor = c * binomial(mono.y, j);
      for (const auto& [e, v] : powers[mono.y - j]) add_into(g[j], e + m * mono.x, factor * v);
    }
  }

  TaylorWindow w;
  for (const auto& gj : g) {
    if (gj.empty()) {
      w.order.emplace_back(std::nullopt);
      w.lead.emplace_back(0);
    } else {
      w.order.emplace_back(Rational(gj.rbegin()->first, m));
      w.order.back()->canonicalize();
      w.lead.push_back(gj.rbegin()->second);
    }
  }
  return w;
}

PolygonValue polygon_value(const TaylorWindow& w, const Rational& alpha) {
  std::optional<PolygonValue> best;
  for (size_t j = 0; j < w.order.size(); ++j) {
    if (!w.order[j]) continue;
    Rational v = *w.order[j] + static_cast<long>(j) * alpha;
    const int jj = static_cast<int>(j);
    if (!best || v > best->exponent) {
      best = PolygonValue{v, jj, jj};
    } else if (v == best->exponent) {
      best->j_max = jj;
    }
  }
  if (!best) throw std::logic_error("polygon_value: empty Newton polygon");
  return *best;
}

std::vector<Rational> polygon_breakpoints(const TaylorWindow& w, const Rational& upper) {
  std::vector<Rational> out;
  const size_t n = w.order.size();
  for (size_t j1 = 0; j1 < n; ++j1) {
    if (!w.order[j1]) continue;
    for (size_t j2 = j1 + 1; j2 < n; ++j2) {
      if (!w.order[j2]) continue;
      Rational alpha = (*w.order[j1] - *w.order[j2]) / static_cast<long>(j2 - j1);
      if (alpha >= upper) continue;
      PolygonValue v = polygon_value(w, alpha);
      if (v.exponent == *w.order[j1] + static_cast<long>(j1) * alpha &&
          v.exponent == *w.order[j2] + static_cast<long>(j2) * alpha) {
        out.push_back(alpha);
      }
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> polygon_horizontal_points(const TaylorWindow& w, const Rational& upper) {
  std::vector<Rational> out;
  for (size_t j = 1; j < w.order.size(); ++j) {
    if (!w.order[j]) continue;
    Rational alpha = -*w.order[j] / static_cast<long>(j);
    if (alpha >= upper) continue;
    PolygonValue v = polygon_value(w, alpha);
    if (sgn(v.exponent) == 0 && v.j_max > 0) out.push_back(alpha);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace npv
