#include "npv/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace npv {

namespace {

void branches_in(const BiPoly& f, const TermMap& fixed, const Rational& alpha, int count,
                 const Rational& cutoff, std::vector<ConcreteBranch>& out) {
  if (alpha < cutoff) {
    for (int k = 0; k < count; ++k) out.emplace_back(fixed, cutoff);
    return;
  }
  Expansion e = expand(f, fixed, alpha);
  const UniPoly& lead = e.lead_coeff();
  if (lead.degree() != count) {
    throw std::logic_error("curve_branches: window degree disagrees with the branch count");
  }
  for (const auto& [c, mult] : gaussian_roots_or_throw(lead)) {
    TermMap next = fixed;
    if (!c.is_zero()) next.emplace(alpha, c);
    TaylorWindow w = taylor_window(f, next);
    std::vector<Rational> bps = polygon_breakpoints(w, alpha);
    if (bps.empty()) {
      // No further splitting: the truncation is an exact root of order mult.
      for (int j = 0; j < mult; ++j) {
        if (w.order[j]) throw std::logic_error("curve_branches: lost a branch");
      }
      for (int k = 0; k < mult; ++k) out.emplace_back(next, std::nullopt);
      continue;
    }
    branches_in(f, next, bps.front(), mult, cutoff, out);
  }
}

struct ChildEvent {
  Rational alpha;
  bool found = false;
};

// Largest exponent below the parent's slot where, along fixed + s*x^alpha,
// P or Q stops being a monomial, or the pair becomes dicritical.
ChildEvent next_event(const MapPair& f, const TermMap& fixed, const Rational& upper) {
  TaylorWindow wp = taylor_window(f.P, fixed);
  TaylorWindow wq = taylor_window(f.Q, fixed);
  std::vector<Rational> events = polygon_breakpoints(wp, upper);
  for (auto& a : polygon_breakpoints(wq, upper)) events.push_back(a);
  for (auto& a : polygon_horizontal_points(wp, upper)) {
    if (polygon_value(wq, a).exponent <= 0) events.push_back(a);
  }
  for (auto& a : polygon_horizontal_points(wq, upper)) {
    if (polygon_value(wp, a).exponent <= 0) events.push_back(a);
  }
  if (events.empty()) return {};
  return ChildEvent{*std::max_element(events.begin(), events.end()), true};
}

bool exceeds_caps(const ExpansionNode& node, const ExpansionCaps& caps) {
  return node.depth >= caps.max_depth || node.series.mult() > caps.max_mult ||
         node.series.param_k() > caps.max_k;
}

// Split a root-free factor of p*q by which of p, q it divides and keep the
// parts whose roots could still lead somewhere dicritical.
void record_unresolved(const UniPoly& h, const LeadingData& lead, std::vector<UniPoly>& out) {
  const UniPoly in_p = gcd(h, lead.p);
  const UniPoly in_q = gcd(h, lead.q);
  const UniPoly both = gcd(in_p, in_q);
  const UniPoly only_p = divmod(in_p, both).first;
  const UniPoly only_q = divmod(in_q, both).first;
  if (both.degree() > 0 && (lead.a > 0 || lead.b > 0)) out.push_back(both);
  if (only_p.degree() > 0 && lead.a > 0 && lead.b <= 0) out.push_back(only_p);
  if (only_q.degree() > 0 && lead.b > 0 && lead.a <= 0) out.push_back(only_q);
}

ExpansionNode make_child(const MapPair& f, const ExpansionNode& parent, const Scalar& c) {
  const ParamSeries& phi = parent.series;
  TermMap fixed = phi.terms();
  if (!c.is_zero()) fixed.emplace(phi.param_exponent(), c);

  ExpansionNode child;
  child.chosen_c = c;
  child.depth = parent.depth + 1;
  ChildEvent ev = next_event(f, fixed, phi.param_exponent());
  if (!ev.found) {
    // Both leading polynomials stay monomials all the way down.
    child.series = ParamSeries(fixed, Rational(phi.param_exponent() - ratio(1, phi.mult())));
    child.lead = leading_data(f, child.series);
    child.status = NodeStatus::dead;
    return child;
  }
  child.series = ParamSeries(fixed, ev.alpha);
  child.lead = leading_data(f, child.series);
  if (classify(child.lead).dicritical) {
    child.status = NodeStatus::dicritical;
  } else if (!may_reach_dicritical(child.lead)) {
    child.status = NodeStatus::dead;
  } else {
    child.status = NodeStatus::open;
  }
  return child;
}

void grow(const MapPair& f, ExpansionNode& node, const ExpansionCaps& caps) {
  if (node.status != NodeStatus::open) return;
  if (exceeds_caps(node, caps)) {
    node.status = NodeStatus::depth_capped;
    return;
  }
  RootFactorization roots = gaussian_roots(node.lead.p * node.lead.q);
  for (const auto& h : roots.unresolved) record_unresolved(h, node.lead, node.unresolved_factors);
  for (const auto& [c, mult] : roots.roots) {
    node.children.push_back(make_child(f, node, c));
    grow(f, node.children.back(), caps);
  }
}

std::vector<Rational> sorted_breakpoints(const MapPair& f, const TermMap& fixed, const Rational& upper,
                                         const Rational& lower) {
  std::vector<Rational> out;
  for (const BiPoly* g : {&f.P, &f.Q}) {
    for (auto& a : polygon_breakpoints(taylor_window(*g, fixed), upper)) {
      if (a >= lower) out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Exponents of phi's fixed terms strictly inside (lower, upper), descending.
std::vector<Rational> term_exponents_between(const ParamSeries& phi, const Rational& lower,
                                             const Rational& upper) {
  std::vector<Rational> out;
  for (const auto& [e, c] : phi.terms()) {
    if (e > lower && e < upper) out.push_back(e);
  }
  return out;
}

TermMap terms_at_or_above(const ParamSeries& phi, const Rational& bound) {
  TermMap out;
  for (const auto& [e, c] : phi.terms()) {
    if (e >= bound) out.emplace(e, c);
  }
  return out;
}

bool canonical_multiplicity(const ParamSeries& s) {
  long g = s.mult();
  g = std::gcd(g, s.param_k());
  for (const auto& st : s.steps()) g = std::gcd(g, st.k);
  return g == 1;
}

SequenceLevel make_level(const MapPair& f, const ParamSeries& series, const ParamSeries& phi, bool last) {
  SequenceLevel level;
  level.series = series;
  level.lead = leading_data(f, series);
  if (!last) {
    level.c = phi.coeff_at(series.param_exponent());
    if (level.c->is_zero()) {
      const UniPoly pq = level.lead.p * level.lead.q;
      level.mixed_tie = pq.coeff(0).is_zero() && !pq.is_monomial();
    }
  }
  return level;
}

}  // namespace

const char* to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::open: return "open";
    case NodeStatus::dicritical: return "dicritical";
    case NodeStatus::dead: return "dead";
    case NodeStatus::depth_capped: return "depth_capped";
  }
  return "unknown";
}

std::vector<ConcreteBranch> curve_branches_to(const BiPoly& f, const Rational& cutoff) {
  if (!is_monic_in_y(f)) throw std::invalid_argument("curve_branches: polynomial must be monic in y");
  std::vector<ConcreteBranch> out;
  if (f.degree() <= 0) return out;
  branches_in(f, TermMap{}, Rational(1), f.degree(), cutoff, out);
  return out;
}

std::vector<ConcreteBranch> curve_branches(const BiPoly& f, long depth_k) {
  if (depth_k < 0) throw std::invalid_argument("curve_branches: depth must be non-negative");
  return curve_branches_to(f, Rational(1 - depth_k));
}

bool may_reach_dicritical(const LeadingData& lead) {
  const bool blocked_p = lead.a > 0 && lead.p.degree() == 0;
  const bool blocked_q = lead.b > 0 && lead.q.degree() == 0;
  return !blocked_p && !blocked_q && (lead.a > 0 || lead.b > 0);
}

ExpansionNode expansion_tree(const MapPair& f, const ExpansionCaps& caps) {
  if (caps.max_mult <= 0 || caps.max_k <= 0 || caps.max_depth <= 0) {
    throw std::invalid_argument("expansion caps must be positive");
  }
  ExpansionNode root;
  root.series = ParamSeries::root();
  root.lead = leading_data(f, root.series);
  root.status = NodeStatus::open;
  grow(f, root, caps);
  return root;
}

AssociatedSequence associated_sequence(const ParamSeries& psi, const ParamSeries& phi, const MapPair& f) {
  if (!is_refinement(psi, phi).holds) {
    throw NotARefinement("associated_sequence: " + phi.to_string() + " does not refine " + psi.to_string());
  }
  const Rational& e_phi = phi.param_exponent();
  AssociatedSequence seq;
  ParamSeries current = psi;
  while (current.param_exponent() > e_phi) {
    seq.levels.push_back(make_level(f, current, phi, false));
    const Rational e_i = current.param_exponent();
    // Walk the segments between phi's own terms; on each the fixed part is
    // constant, so one Newton polygon per segment finds the breakpoints.
    std::vector<Rational> bounds = term_exponents_between(phi, e_phi, e_i);
    bounds.push_back(e_phi);
    Rational upper = e_i;
    std::optional<Rational> next;
    for (const auto& lower : bounds) {
      auto bps = sorted_breakpoints(f, terms_at_or_above(phi, upper), upper, lower);
      if (!bps.empty()) {
        next = bps.front();
        break;
      }
      upper = lower;
    }
    current = prefix_at(phi, next.value_or(e_phi));
  }
  seq.levels.push_back(make_level(f, current, phi, true));

  // Level conditions.
  for (size_t i = 0; i < seq.levels.size(); ++i) {
    const auto& lv = seq.levels[i];
    if (!canonical_multiplicity(lv.series)) {
      throw VerificationFailure("S1: non-canonical multiplicity at level " + std::to_string(i));
    }
    if (i + 1 == seq.levels.size()) break;
    if (lv.lead.p.is_monomial() && lv.lead.q.is_monomial()) {
      throw VerificationFailure("S2: p and q have no nonzero root at level " + std::to_string(i));
    }
    // S3: strictly between consecutive levels both stay monomials. Probe
    // every term exponent of phi in the gap and the midpoint of each piece.
    const Rational hi = lv.series.param_exponent();
    const Rational lo = seq.levels[i + 1].series.param_exponent();
    std::vector<Rational> cuts{hi};
    for (auto& e : term_exponents_between(phi, lo, hi)) cuts.push_back(e);
    cuts.push_back(lo);
    std::vector<Rational> probes;
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
      probes.push_back(Rational((cuts[k] + cuts[k + 1]) / 2));
      if (k > 0) probes.push_back(cuts[k]);
    }
    for (const auto& alpha : probes) {
      LeadingData ld = leading_data(f, prefix_at(phi, alpha));
      if (!ld.p.is_monomial() || !ld.q.is_monomial()) {
        throw VerificationFailure("S3: non-monomial leading data at exponent " + alpha.get_str() +
                                  " between levels " + std::to_string(i) + " and " +
                                  std::to_string(i + 1));
      }
    }
  }
  return seq;
}

std::optional<Scalar> branch_in_window(const ConcreteBranch& branch, const ParamSeries& window) {
  const Rational& e = window.param_exponent();
  if (branch.cutoff() && *branch.cutoff() > e) {
    throw std::logic_error("branch_in_window: branch not known down to the window exponent");
  }
  std::set<Rational> exps;
  for (const auto& [x, c] : branch.terms()) {
    if (x > e) exps.insert(x);
  }
  for (const auto& [x, c] : window.terms()) exps.insert(x);
  for (const auto& x : exps) {
    if (branch.coeff_at(x) != window.coeff_at(x)) return std::nullopt;
  }
  return branch.coeff_at(e);
}

RootIndexData root_index_data(const AssociatedSequence& seq, const MapPair& f) {
  RootIndexData out;
  const Rational cutoff = seq.levels.back().series.param_exponent();
  try {
    out.p_branches = curve_branches_to(f.P, cutoff);
    out.q_branches = curve_branches_to(f.Q, cutoff);
  } catch (const ExtensionRequired& e) {
    out.inferred = true;
    out.note = std::string("cardinality mode: ") + e.what();
    out.p_branches.clear();
    out.q_branches.clear();
  }

  for (const auto& lv : seq.levels) {
    LevelRootData d;
    d.A = lv.lead.p.leading_coeff();
    d.B = lv.lead.q.leading_coeff();
    if (out.inferred) {
      d.nS = lv.lead.p.degree();
      d.nT = lv.lead.q.degree();
      d.nS0 = lv.c ? lv.lead.p.root_multiplicity(*lv.c) : 0;
      d.nT0 = lv.c ? lv.lead.q.root_multiplicity(*lv.c) : 0;
      const Scalar c = lv.c.value_or(Scalar(0));
      d.pbar = divmod(lv.lead.p, UniPoly::linear_factor(c).pow(d.nS0) * d.A).first;
      d.qbar = divmod(lv.lead.q, UniPoly::linear_factor(c).pow(d.nT0) * d.B).first;
    } else {
      d.pbar = UniPoly(Scalar(1));
      d.qbar = UniPoly(Scalar(1));
      auto collect = [&](const std::vector<ConcreteBranch>& branches, std::vector<size_t>& all,
                         std::vector<size_t>& at_c, UniPoly& bar) {
        for (size_t k = 0; k < branches.size(); ++k) {
          auto coeff = branch_in_window(branches[k], lv.series);
          if (!coeff) continue;
          all.push_back(k);
          if (lv.c && *coeff == *lv.c) {
            at_c.push_back(k);
          } else {
            bar *= UniPoly::linear_factor(*coeff);
          }
        }
      };
      collect(out.p_branches, d.S, d.S0, d.pbar);
      collect(out.q_branches, d.T, d.T0, d.qbar);
      d.nS = static_cast<long>(d.S.size());
      d.nT = static_cast<long>(d.T.size());
      d.nS0 = static_cast<long>(d.S0.size());
      d.nT0 = static_cast<long>(d.T0.size());
    }
    const Scalar c = lv.c.value_or(Scalar(0));
    d.p_identity = lv.lead.p == d.A * d.pbar * UniPoly::linear_factor(c).pow(static_cast<unsigned>(d.nS0));
    d.q_identity = lv.lead.q == d.B * d.qbar * UniPoly::linear_factor(c).pow(static_cast<unsigned>(d.nT0));
    out.levels.push_back(std::move(d));
  }
  return out;
}

}  // namespace npv
