#include "npv/valueset.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <set>

namespace npv {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Conjugacy under x^(1/m) -> zeta x^(1/m) multiplies the coefficient at
// exponent e by zeta^(e*m). Coefficients are Gaussian rationals, so a
// double comparison against each m-th root of unity is decisive.
bool conjugate_series(const ParamSeries& a, const ParamSeries& b) {
  if (a.param_exponent() != b.param_exponent() || a.mult() != b.mult()) return false;
  if (a.terms().size() != b.terms().size()) return false;
  for (const auto& [e, c] : a.terms()) {
    if (!b.terms().count(e)) return false;
  }
  const long m = a.mult();
  for (long j = 0; j < m; ++j) {
    const double angle = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(m);
    bool all = true;
    for (const auto& [e, c] : a.terms()) {
      const long em = Rational(e * m).get_num().get_si();
      const std::complex<double> zeta = std::polar(1.0, angle * static_cast<double>(em));
      const std::complex<double> moved = c.to_complex() * zeta;
      if (std::abs(moved - b.coeff_at(e).to_complex()) > 1e-9 * (1.0 + std::abs(moved))) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

// Image of (u2, v2) inside the curve parameterized by (u1, v1), all four
// nonconstant: Res_z(u1(z) - u2(t), v1(z) - v2(t)) vanishes identically in t.
// The resultant has degree at most deg v1 deg u2 + deg u1 deg v2 in t, so it
// is zero once it vanishes at that many plus one points.
bool image_contained(const UniPoly& u1, const UniPoly& v1, const UniPoly& u2, const UniPoly& v2) {
  const long bound = static_cast<long>(v1.degree()) * u2.degree() + static_cast<long>(u1.degree()) * v2.degree();
  for (long t = 0; t <= bound; ++t) {
    const Scalar st(t);
    const UniPoly a = u1 - UniPoly(u2.eval(st));
    const UniPoly b = v1 - UniPoly(v2.eval(st));
    // Leading coefficients do not depend on t, so the resultant vanishes
    // exactly when a and b share a root.
    if (gcd(a, b).degree() <= 0) return false;
  }
  return true;
}

long integer_gcd(long a, long b) { return std::gcd(a, b); }

// x, y with x*a + y*b = gcd(a, b).
std::pair<long, long> bezout(long a, long b) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  return {old_s, old_t};
}

Rational level_ratio(const SequenceLevel& lv) { return lv.n_over_m(); }

std::string ratio_string(const Rational& r) { return r.get_str(); }

// A truncated Laurent-Puiseux series: exact at exponents >= reliable (or
// everywhere when reliable is empty); top bounds every exponent, known or not.
struct Approx {
  TermMap terms;
  std::optional<Rational> reliable;
  std::optional<Rational> top;  // empty for the exact zero series
};

std::optional<Rational> max_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

std::optional<Rational> add_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a || !b) return std::nullopt;
  return Rational(*a + *b);
}

void add_term(TermMap& t, const Rational& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

Approx approx_sum(const Approx& a, const Approx& b) {
  Approx out;
  out.terms = a.terms;
  for (const auto& [e, c] : b.terms) add_term(out.terms, e, c);
  out.reliable = max_opt(a.reliable, b.reliable);
  out.top = max_opt(a.top, b.top);
  return out;
}

Approx approx_product(const Approx& a, const Approx& b) {
  Approx out;
  if (!a.top || !b.top) return out;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) add_term(out.terms, Rational(ea + eb), ca * cb);
  }
  out.reliable = max_opt(add_opt(a.reliable, b.top), add_opt(b.reliable, a.top));
  out.top = Rational(*a.top + *b.top);
  return out;
}

Approx approx_of(const ConcreteBranch& u, bool negate) {
  Approx out;
  for (const auto& [e, c] : u.terms()) out.terms.emplace(e, negate ? -c : c);
  out.reliable = u.cutoff();
  if (!out.terms.empty()) out.top = out.terms.begin()->first;
  if (u.cutoff()) out.top = max_opt(out.top, u.cutoff());
  return out;
}

Approx approx_constant(const Scalar& c) {
  Approx out;
  if (!c.is_zero()) {
    out.terms.emplace(Rational(0), c);
    out.top = Rational(0);
  }
  return out;
}

}  // namespace

// ---- value set ----

DicriticalSet dicritical_series(const MapPair& f, const ExpansionCaps& caps) {
  DicriticalSet out;
  const ExpansionNode root = expansion_tree(f, caps);
  visit(root, [&](const ExpansionNode& node) {
    if (node.status == NodeStatus::dicritical) {
      for (const auto& seen : out.series) {
        if (conjugate_series(seen.series, node.series)) return;
      }
      out.series.push_back(DicriticalEntry{node.series, node.lead});
    } else if (node.status == NodeStatus::depth_capped) {
      out.unresolved.push_back(UnresolvedLeaf{node.series, "expansion cap reached"});
    }
    for (const auto& h : node.unresolved_factors) {
      out.unresolved.push_back(
          UnresolvedLeaf{node.series, "no root in Q(i) for factor " + h.to_string()});
    }
  });
  return out;
}

bool same_image(const UniPoly& u1, const UniPoly& v1, const UniPoly& u2, const UniPoly& v2) {
  if ((u1.is_constant() && v1.is_constant()) || (u2.is_constant() && v2.is_constant())) {
    throw std::invalid_argument("same_image: constant parameterization");
  }
  if (u1.is_constant() || u2.is_constant()) return u1.is_constant() && u2.is_constant() && u1 == u2;
  if (v1.is_constant() || v2.is_constant()) return v1.is_constant() && v2.is_constant() && v1 == v2;
  return image_contained(u1, v1, u2, v2) && image_contained(u2, v2, u1, v1);
}

ValueSet nonproper_value_set(const MapPair& f, const ExpansionCaps& caps) {
  ValueSet out;
  DicriticalSet dic = dicritical_series(f, caps);
  out.unresolved = std::move(dic.unresolved);
  for (const auto& entry : dic.series) {
    ValueSetComponent comp;
    comp.source = entry.series;
    comp.u_vanishes = entry.lead.a < 0;
    comp.v_vanishes = entry.lead.b < 0;
    comp.u = comp.u_vanishes ? UniPoly() : entry.lead.p;
    comp.v = comp.v_vanishes ? UniPoly() : entry.lead.q;
    if (comp.u.is_constant() && comp.v.is_constant()) {
      throw std::logic_error("dicritical series " + entry.series.to_string() + " has a constant limit");
    }
    bool merged = false;
    for (auto& existing : out.components) {
      if (same_image(existing.u, existing.v, comp.u, comp.v)) {
        existing.merged.push_back(comp.source);
        merged = true;
        break;
      }
    }
    if (!merged) out.components.push_back(std::move(comp));
  }
  return out;
}

// ---- reports ----

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::vacuous: return "vacuous";
  }
  return "unknown";
}

void CheckReport::add(std::string name, bool ok, std::string detail) {
  items.push_back(CheckItem{std::move(name), ok, std::move(detail)});
}

void CheckReport::settle() {
  if (items.empty()) {
    status = CheckStatus::vacuous;
    return;
  }
  status = CheckStatus::pass;
  for (const auto& it : items) {
    if (!it.ok) status = CheckStatus::fail;
  }
}

// ---- theorem 1 ----

Theorem1Certificate verify_theorem1(const LeadingData& psi, const LeadingData& phi) {
  Theorem1Certificate cert;
  cert.hypothesis_met = psi.a > 0 && psi.b > 0 && psi.j.degree() == 0;
  if (psi.a <= 0 || psi.b <= 0) {
    cert.note = "a_psi or b_psi is not positive";
    return cert;
  }
  cert.M = integer_gcd(psi.a, psi.b);
  cert.d = psi.a / cert.M;
  cert.e = psi.b / cert.M;
  if (psi.j.degree() > 0) cert.note = "psi is singular";

  const long dp = psi.p.degree(), dq = psi.q.degree();
  if (dp > 0 && dp % cert.d == 0) {
    cert.N = dp / cert.d;
    cert.conclusion_i_ok = dq == cert.N * cert.e;
  }
  if (!cert.conclusion_i_ok) cert.N = 0;

  const long Dp = phi.p.degree(), Dq = phi.q.degree();
  bool degrees_ok = false;
  if (Dp > 0 && Dp % cert.d == 0) {
    cert.D = Dp / cert.d;
    degrees_ok = Dq == cert.D * cert.e;
  }
  if (!degrees_ok) cert.D = 0;

  const Scalar rp = phi.p.leading_coeff() / psi.p.leading_coeff();
  const Scalar rq = phi.q.leading_coeff() / psi.q.leading_coeff();
  // gcd(d, e) = 1 pins C down: C = C^(d x) C^(e y) = rp^x rq^y.
  auto [x, y] = bezout(cert.d, cert.e);
  const Scalar c = rp.pow(x) * rq.pow(y);
  if (!c.is_zero() && c.pow(cert.d) == rp && c.pow(cert.e) == rq) cert.C.push_back(c);

  cert.conclusion_ii_ok = phi.a == 0 && phi.b == 0 && degrees_ok && !cert.C.empty();
  return cert;
}

Theorem1Certificate verify_theorem1(const MapPair& f, const ParamSeries& psi, const ParamSeries& phi) {
  if (!is_refinement(psi, phi).holds) {
    throw NotARefinement("theorem 1: " + phi.to_string() + " does not refine " + psi.to_string());
  }
  const LeadingData phi_lead = leading_data(f, phi);
  if (!classify(phi_lead).dicritical) {
    throw PreconditionFailed("theorem 1: " + phi.to_string() + " is not dicritical");
  }
  Theorem1Certificate cert = verify_theorem1(leading_data(f, psi), phi_lead);
  cert.psi = psi;
  cert.phi = phi;
  return cert;
}

// ---- theorem 2 ----

std::vector<ParamSeries> horizontal_q_prefixes(const MapPair& f, const ParamSeries& phi) {
  std::set<Rational, std::greater<Rational>> alphas;
  std::vector<Rational> lowers;
  for (const auto& [e, c] : phi.terms()) {
    if (e < 1) lowers.push_back(e);
  }
  lowers.push_back(phi.param_exponent());
  Rational upper(1);
  for (const auto& lower : lowers) {
    TermMap fixed;
    for (const auto& [e, c] : phi.terms()) {
      if (e >= upper) fixed.emplace(e, c);
    }
    for (const auto& a : polygon_horizontal_points(taylor_window(f.Q, fixed), upper)) {
      if (a >= lower && a > phi.param_exponent()) alphas.insert(a);
    }
    upper = lower;
  }
  std::vector<ParamSeries> out;
  for (const auto& a : alphas) {
    ParamSeries psi = prefix_at(phi, a);
    if (classify(leading_data(f, psi)).horizontal_Q) out.push_back(psi);
  }
  return out;
}

Theorem2Certificate verify_theorem2(const MapPair& f, const ParamSeries& phi) {
  const LeadingData lead = leading_data(f, phi);
  const SeriesClass cls = classify(lead);
  if (!cls.dicritical || lead.a != 0 || lead.b >= 0) {
    throw PreconditionFailed("theorem 2: " + phi.to_string() + " is not dicritical with a = 0, b < 0");
  }
  Theorem2Certificate cert;
  cert.phi = phi;
  cert.phi_singular = cls.singular;
  cert.candidates = horizontal_q_prefixes(f, phi);
  for (const auto& psi : cert.candidates) {
    const SeriesClass c = classify(leading_data(f, psi));
    if (!cert.witness_psi || (c.horizontal_Q && c.singular && !cert.witness_singular)) {
      cert.witness_psi = psi;
      cert.witness_horizontal_Q = c.horizontal_Q;
      cert.witness_singular = c.singular;
    }
  }
  return cert;
}

// ---- lemma 2 ----

CheckReport check_lemma2(const AssociatedSequence& seq, const RootIndexData& data) {
  CheckReport r;
  r.check = "lemma2";
  if (data.levels.size() != seq.levels.size()) {
    throw std::invalid_argument("lemma 2: root data and sequence have different lengths");
  }
  if (data.inferred) r.note = "cardinalities inferred from leading polynomials";
  for (size_t i = 0; i < seq.levels.size(); ++i) {
    const auto& d = data.levels[i];
    const std::string at = "[" + std::to_string(i) + "]";
    r.add("p_factorization" + at, d.p_identity);
    r.add("q_factorization" + at, d.q_identity);
  }
  for (size_t i = 1; i < seq.levels.size(); ++i) {
    const auto& prev = seq.levels[i - 1];
    const auto& cur = seq.levels[i];
    const auto& dp = data.levels[i - 1];
    const auto& dc = data.levels[i];
    const Scalar c = prev.c.value_or(Scalar(0));
    const std::string at = "[" + std::to_string(i) + "]";
    const Rational step = level_ratio(prev) - level_ratio(cur);

    const Scalar A = dp.A * dp.pbar.eval(c);
    r.add("A" + at, dc.A == A, "A_i=" + dc.A.to_string() + " predicted " + A.to_string());
    r.add("deg_p" + at, cur.lead.p.degree() == dc.nS && dc.nS == dp.nS0,
          "deg p_i=" + std::to_string(cur.lead.p.degree()) + " #S_i=" + std::to_string(dc.nS) +
              " #S0_(i-1)=" + std::to_string(dp.nS0));
    const Rational a_pred = ratio(prev.lead.a, prev.lead.mult) + dp.nS0 * step;
    const Rational a_cur = ratio(cur.lead.a, cur.lead.mult);
    r.add("a_exponent" + at, a_cur == a_pred,
          "a_i/m_i=" + ratio_string(a_cur) + " predicted " + ratio_string(a_pred));

    const Scalar B = dp.B * dp.qbar.eval(c);
    r.add("B" + at, dc.B == B, "B_i=" + dc.B.to_string() + " predicted " + B.to_string());
    r.add("deg_q" + at, cur.lead.q.degree() == dc.nT && dc.nT == dp.nT0,
          "deg q_i=" + std::to_string(cur.lead.q.degree()) + " #T_i=" + std::to_string(dc.nT) +
              " #T0_(i-1)=" + std::to_string(dp.nT0));
    const Rational b_pred = ratio(prev.lead.b, prev.lead.mult) + dp.nT0 * step;
    const Rational b_cur = ratio(cur.lead.b, cur.lead.mult);
    r.add("b_exponent" + at, b_cur == b_pred,
          "b_i/m_i=" + ratio_string(b_cur) + " predicted " + ratio_string(b_pred));
  }
  r.settle();
  if (seq.levels.size() == 1) r.status = CheckStatus::vacuous;
  return r;
}

// ---- lemma 3 and the horizontal-Q identity ----

CheckReport check_lemma3(const LeadingData& lead, int sigma) {
  if (lead.a <= 0 || lead.b <= 0 || lead.j.degree() != 0) {
    throw PreconditionFailed("lemma 3 needs a > 0, b > 0 and a constant j");
  }
  CheckReport r;
  r.check = "lemma3";
  const DeltaData dd = delta(lead);
  const std::string sides = "a+b=" + std::to_string(dd.exponent_lhs) + " 2m-n+J=" + std::to_string(dd.exponent_rhs);
  if (dd.exponent_lhs == dd.exponent_rhs) {
    r.add("delta_is_sigma_mj", dd.delta == dd.mj * Scalar(sigma),
          sides + " delta=" + dd.delta.to_string() + " mj=" + dd.mj.to_string());
  } else if (dd.exponent_lhs > dd.exponent_rhs) {
    r.add("delta_vanishes", dd.delta.is_zero(), sides + " delta=" + dd.delta.to_string());
  } else {
    r.add("exponent_order", false, sides);
  }
  if (!lead.p.is_constant() || !lead.q.is_constant()) {
    const bool common = gcd(lead.p, lead.q).degree() > 0;
    r.add("vanishing_criterion", dd.delta.is_zero() == common,
          "delta_zero=" + yes_no(dd.delta.is_zero()) + " common_zero=" + yes_no(common));
  }
  if (dd.delta.is_zero()) {
    const long g = integer_gcd(lead.a, lead.b);
    const unsigned ra = static_cast<unsigned>(lead.a / g), rb = static_cast<unsigned>(lead.b / g);
    const Scalar C = lead.p.leading_coeff().pow(rb) / lead.q.leading_coeff().pow(ra);
    r.add("proportionality", lead.p.pow(rb) == lead.q.pow(ra) * C,
          "p^" + std::to_string(rb) + " = " + C.to_string() + " q^" + std::to_string(ra));
  }
  r.settle();
  return r;
}

CheckReport check_section5_identity(const LeadingData& lead, int sigma_prime) {
  if (lead.a <= 0 || lead.b != 0 || lead.q.degree() <= 0) {
    throw PreconditionFailed("horizontal-Q identity needs a > 0, b = 0 and deg q > 0");
  }
  CheckReport r;
  r.check = "section5";
  const UniPoly mj = lead.j * Scalar(lead.mult);
  const UniPoly rhs = lead.p * lead.q.derivative() * Scalar(lead.a) * Scalar(sigma_prime);
  r.add("mj_is_sigma_a_p_qdot", mj == rhs, "mj=" + mj.to_string() + " a*p*q'=" + (rhs * Scalar(sigma_prime)).to_string());
  const bool j_varies = lead.j.degree() > 0;
  const bool pq_varies = (lead.p * lead.q.derivative()).degree() > 0;
  r.add("singular_iff_p_qdot_varies", j_varies == pq_varies,
        "deg j=" + std::to_string(lead.j.degree()) + " deg p*q'=" + std::to_string((lead.p * lead.q.derivative()).degree()));
  const long rhs_exp = lead.a + lead.b - 2 * lead.mult + lead.param_k;
  r.add("jacobian_exponent", lead.J == rhs_exp,
        "J=" + std::to_string(lead.J) + " a+b-2m+n=" + std::to_string(rhs_exp));
  r.settle();
  return r;
}

// ---- lemma 4 ----

CheckReport check_lemma4(const std::vector<Lemma4Level>& levels, long d, long e) {
  if (d <= 0 || e <= 0 || integer_gcd(d, e) != 1) throw PreconditionFailed("lemma 4 needs coprime d, e > 0");
  CheckReport r;
  r.check = "lemma4";
  for (size_t i = 0; i < levels.size(); ++i) {
    const auto& lv = levels[i];
    const std::string at = "[" + std::to_string(i) + "]";
    r.add("positive" + at, lv.a > 0 && lv.b > 0, "a=" + std::to_string(lv.a) + " b=" + std::to_string(lv.b));
    r.add("ratio" + at, lv.a * e == lv.b * d && lv.a * lv.nT == lv.b * lv.nS,
          "a/b=" + std::to_string(lv.a) + "/" + std::to_string(lv.b) + " #S/#T=" + std::to_string(lv.nS) +
              "/" + std::to_string(lv.nT) + " d/e=" + std::to_string(d) + "/" + std::to_string(e));
    r.add("root_ratio" + at, lv.nS0 * e == lv.nT0 * d,
          "#S0/#T0=" + std::to_string(lv.nS0) + "/" + std::to_string(lv.nT0));
    r.add("pbar_qbar" + at,
          lv.pbar.pow(static_cast<unsigned>(e)) == lv.qbar.pow(static_cast<unsigned>(d)),
          "pbar=" + lv.pbar.to_string() + " qbar=" + lv.qbar.to_string());
  }
  r.settle();
  return r;
}

CheckReport check_lemma4(const AssociatedSequence& seq, const RootIndexData& data) {
  const LeadingData& l0 = seq.levels.front().lead;
  if (l0.a <= 0 || l0.b <= 0 || l0.j.degree() != 0) {
    throw PreconditionFailed("lemma 4 needs a non-singular start with a, b > 0");
  }
  if (!classify(seq.levels.back().lead).dicritical) {
    throw PreconditionFailed("lemma 4 needs a dicritical end");
  }
  const long g = integer_gcd(l0.a, l0.b);
  std::vector<Lemma4Level> levels;
  for (size_t i = 0; i + 1 < seq.levels.size(); ++i) {
    const auto& lead = seq.levels[i].lead;
    const auto& d = data.levels[i];
    levels.push_back(Lemma4Level{lead.a, lead.b, d.nS, d.nT, d.nS0, d.nT0, d.pbar, d.qbar});
  }
  CheckReport r = check_lemma4(levels, l0.a / g, l0.b / g);
  if (data.inferred) r.note = "cardinalities inferred from leading polynomials";
  return r;
}

// ---- eq. 9 ----

CheckReport check_eq9(const AssociatedSequence& seq) {
  const LeadingData& last = seq.levels.back().lead;
  bool swapped = false;
  if (last.a == 0 && last.p.degree() > 0) {
    swapped = false;
  } else if (last.b == 0 && last.q.degree() > 0) {
    swapped = true;
  } else {
    throw PreconditionFailed("eq9 needs a final level horizontal for P or Q");
  }
  CheckReport r;
  r.check = "eq9";
  if (swapped) r.note = "roles of P and Q exchanged";
  for (size_t i = 0; i + 1 < seq.levels.size(); ++i) {
    const auto& lv = seq.levels[i];
    if (!lv.c) throw std::invalid_argument("eq9: inner level without a coefficient");
    const UniPoly& p = swapped ? lv.lead.q : lv.lead.p;
    const UniPoly& q = swapped ? lv.lead.p : lv.lead.q;
    const long a = swapped ? lv.lead.b : lv.lead.a;
    const long b = swapped ? lv.lead.a : lv.lead.b;
    const std::string at = "[" + std::to_string(i) + "]";
    r.add("p_root" + at, p.eval(*lv.c).is_zero(), "c=" + lv.c->to_string() + " p=" + p.to_string());
    r.add("a_positive" + at, a > 0, "a=" + std::to_string(a));
    if (b > 0) r.add("q_root" + at, q.eval(*lv.c).is_zero(), "q=" + q.to_string());
  }
  r.settle();
  return r;
}

// ---- eq. 4 ----

CheckReport check_eq4(const std::vector<ValueSetComponent>& components, long deg_P, long deg_Q) {
  CheckReport r;
  r.check = "eq4";
  for (size_t i = 0; i < components.size(); ++i) {
    const long du = components[i].u.degree(), dv = components[i].v.degree();
    r.add("degree_ratio[" + std::to_string(i) + "]", du > 0 && dv > 0 && du * deg_Q == dv * deg_P,
          "deg u/deg v=" + std::to_string(du) + "/" + std::to_string(dv) + " deg P/deg Q=" +
              std::to_string(deg_P) + "/" + std::to_string(deg_Q));
  }
  r.settle();
  if (components.empty()) r.note = "no components";
  return r;
}

CheckReport check_eq4(const std::vector<ValueSetComponent>& components, const MapPair& f) {
  if (f.jac.is_zero() || !f.jac.is_constant()) throw PreconditionFailed("eq4 needs a nonzero constant Jacobian");
  return check_eq4(components, f.deg_P(), f.deg_Q());
}

// ---- newton factorization ----

CheckReport check_newton_factorization(const BiPoly& f, const std::vector<ConcreteBranch>& branches) {
  CheckReport r;
  r.check = "newton_factorization";
  const int d = f.degree();
  r.add("branch_count", static_cast<int>(branches.size()) == d,
        std::to_string(branches.size()) + " branches for degree " + std::to_string(d));
  if (static_cast<int>(branches.size()) != d || d < 0) {
    r.settle();
    return r;
  }
  // coefficient k of prod (y - u_i), built one factor at a time
  std::vector<Approx> prod{approx_constant(Scalar(1))};
  for (const auto& u : branches) {
    const Approx neg_u = approx_of(u, true);
    std::vector<Approx> next(prod.size() + 1);
    for (size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] = approx_sum(next[k + 1], prod[k]);
      next[k] = approx_sum(next[k], approx_product(prod[k], neg_u));
    }
    prod = std::move(next);
  }
  const Scalar lc = f.coeff(0, d);
  for (int k = 0; k <= d; ++k) {
    TermMap expected;
    const UniPoly ck = f.coeff_in_y(k);
    for (int e = 0; e <= ck.degree(); ++e) add_term(expected, Rational(e), ck.coeff(e));
    TermMap got;
    for (const auto& [e, c] : prod[k].terms) add_term(got, e, c * lc);
    const auto& bound = prod[k].reliable;
    std::set<Rational> exps;
    for (const auto& [e, c] : expected) exps.insert(e);
    for (const auto& [e, c] : got) exps.insert(e);
    bool ok = true;
    std::string mismatch;
    for (const auto& e : exps) {
      if (bound && e < *bound) continue;
      auto gi = got.find(e);
      auto ei = expected.find(e);
      const Scalar g = gi == got.end() ? Scalar(0) : gi->second;
      const Scalar x = ei == expected.end() ? Scalar(0) : ei->second;
      if (g != x && ok) {
        ok = false;
        mismatch = " first mismatch at x^" + e.get_str();
      }
    }
    r.add("y^" + std::to_string(k), ok,
          std::string("compared ") + (bound ? "exponents >= " + bound->get_str() : "all exponents") + mismatch);
  }
  r.settle();
  return r;
}

}  // namespace npv
