#include "npv/report.hpp"

#include <map>

#include "npv/corpus.hpp"
#include "npv/parse.hpp"

namespace npv {

namespace {

MapPair swapped(const MapPair& f) { return MapPair{f.Q, f.P, -f.jac, f.shear}; }

LeadingData swapped(const LeadingData& l) {
  LeadingData out = l;
  std::swap(out.p, out.q);
  std::swap(out.a, out.b);
  out.j = -l.j;
  return out;
}

void count(Verification& v, const std::string& name, CheckStatus status) {
  Json& c = v.counters[name];
  if (c.is_null()) c = Json{{"pass", 0}, {"fail", 0}, {"vacuous", 0}};
  c[to_string(status)] = c[to_string(status)].get<int>() + 1;
  if (status == CheckStatus::fail) v.failed = true;
}

void push(Verification& v, const std::string& name, const std::string& subject, CheckStatus status, Json data) {
  v.checks.push_back(Json{{"name", name}, {"subject", subject}, {"status", to_string(status)}, {"data", std::move(data)}});
  count(v, name, status);
}

void push_report(Verification& v, const std::string& name, const std::string& subject, const CheckReport& r) {
  push(v, name, subject, r.status, report_json(r));
}

// Windows are gathered from several sources; keep the first of each.
struct WindowPool {
  std::vector<std::pair<std::string, ParamSeries>> items;
  std::set<std::string> seen;
  void add(const ParamSeries& s, const std::string& origin) {
    if (seen.insert(s.to_string()).second) items.emplace_back(origin, s);
  }
};

std::string ratio_of(const UniPoly& num, const UniPoly& den) {
  // num = r * den for a constant r, or "none"
  if (den.is_zero() || num.degree() != den.degree()) return "none";
  const Scalar r = num.leading_coeff() / den.leading_coeff();
  return num == den * r ? r.to_string() : "none";
}

}  // namespace

// ---- JSON encoders ----

Json scalar_json(const Scalar& c) { return c.to_string(); }

Json poly_json(const UniPoly& p) { return p.coeff_strings(); }

Json series_json(const ParamSeries& s) {
  Json steps = Json::array();
  for (const auto& st : s.steps()) steps.push_back(Json{{"k", st.k}, {"coeff", scalar_json(st.coeff)}});
  return Json{{"text", s.to_string()},
              {"mult", s.mult()},
              {"steps", steps},
              {"param_k", s.param_k()},
              {"param_exponent", s.param_exponent().get_str()}};
}

Json branch_json(const ConcreteBranch& b) {
  Json steps = Json::array();
  for (const auto& st : b.steps()) steps.push_back(Json{{"k", st.k}, {"coeff", scalar_json(st.coeff)}});
  Json trunc = nullptr;
  if (auto k = b.truncation_k()) trunc = k->get_str();
  return Json{{"text", b.to_string()}, {"mult", b.mult()}, {"steps", steps}, {"truncation_k", trunc}};
}

Json lead_json(const LeadingData& l) {
  return Json{{"p", poly_json(l.p)}, {"a", l.a}, {"q", poly_json(l.q)}, {"b", l.b},
              {"j", poly_json(l.j)}, {"J", l.J}, {"m", l.mult}, {"n", l.param_k}};
}

Json class_json(const SeriesClass& c) {
  return Json{{"horizontal_P", c.horizontal_P},
              {"horizontal_Q", c.horizontal_Q},
              {"dicritical", c.dicritical},
              {"singular", c.singular}};
}

Json map_json(const MapPair& f) {
  return Json{{"P", f.P.to_string()}, {"Q", f.Q.to_string()}, {"shear", f.shear}, {"J", f.jac.to_string()}};
}

Json tree_json(const ExpansionNode& node) {
  Json children = Json::array();
  for (const auto& c : node.children) children.push_back(tree_json(c));
  Json unresolved = Json::array();
  for (const auto& h : node.unresolved_factors) unresolved.push_back(h.to_string());
  return Json{{"series", node.series.to_string()},
              {"c", node.chosen_c ? scalar_json(*node.chosen_c) : Json(nullptr)},
              {"status", to_string(node.status)},
              {"lead", lead_json(node.lead)},
              {"class", class_json(classify(node.lead))},
              {"unresolved_factors", unresolved},
              {"children", children}};
}

Json component_json(const ValueSetComponent& c) {
  Json merged = Json::array();
  for (const auto& s : c.merged) merged.push_back(s.to_string());
  return Json{{"u", poly_json(c.u)},
              {"v", poly_json(c.v)},
              {"u_text", c.u.to_string()},
              {"v_text", c.v.to_string()},
              {"u_vanishes", c.u_vanishes},
              {"v_vanishes", c.v_vanishes},
              {"source", series_json(c.source)},
              {"merged", merged}};
}

Json valueset_json(const ValueSet& vs) {
  Json comps = Json::array();
  for (const auto& c : vs.components) comps.push_back(component_json(c));
  Json unresolved = Json::array();
  for (const auto& u : vs.unresolved) unresolved.push_back(Json{{"series", u.series.to_string()}, {"reason", u.reason}});
  return Json{{"components", comps}, {"lower_bound", vs.lower_bound()}, {"unresolved", unresolved}};
}

Json report_json(const CheckReport& r) {
  Json items = Json::array();
  for (const auto& it : r.items) items.push_back(Json{{"name", it.name}, {"ok", it.ok}, {"detail", it.detail}});
  return Json{{"items", items}, {"note", r.note}};
}

Json theorem1_json(const Theorem1Certificate& c) {
  Json cs = Json::array();
  for (const auto& x : c.C) cs.push_back(scalar_json(x));
  return Json{{"psi", c.psi.to_string()}, {"phi", c.phi.to_string()}, {"M", c.M}, {"d", c.d}, {"e", c.e},
              {"N", c.N}, {"D", c.D}, {"C", cs}, {"hypothesis_met", c.hypothesis_met},
              {"conclusion_i_ok", c.conclusion_i_ok}, {"conclusion_ii_ok", c.conclusion_ii_ok}, {"note", c.note}};
}

Json theorem2_json(const Theorem2Certificate& c) {
  Json cands = Json::array();
  for (const auto& s : c.candidates) cands.push_back(s.to_string());
  return Json{{"phi", c.phi.to_string()},
              {"phi_singular", c.phi_singular},
              {"witness_psi", c.witness_psi ? Json(c.witness_psi->to_string()) : Json(nullptr)},
              {"witness_horizontal_Q", c.witness_horizontal_Q},
              {"witness_singular", c.witness_singular},
              {"candidates", cands}};
}

const std::set<std::string>& check_names() {
  static const std::set<std::string> names{"theorem1", "theorem2", "lemma2", "lemma3", "lemma4",
                                           "eq4",      "eq9",      "section5", "factorization"};
  return names;
}

// ---- verification ----

Verification verify_map(const MapPair& f, const std::set<std::string>& what, const RunOptions& opt) {
  for (const auto& w : what) {
    if (w != "all" && !check_names().count(w)) throw std::invalid_argument("unknown check '" + w + "'");
  }
  auto want = [&](const std::string& name) { return what.count("all") || what.count(name); };
  Verification v;
  std::set<std::string> sigma_seen, sigma_prime_seen;

  if (want("factorization")) {
    for (const auto& [label, poly] : {std::pair<std::string, const BiPoly*>{"P", &f.P}, {"Q", &f.Q}}) {
      try {
        const auto branches = curve_branches(*poly, opt.depth_k);
        push_report(v, "factorization", label, check_newton_factorization(*poly, branches));
      } catch (const ExtensionRequired& e) {
        push(v, "factorization", label, CheckStatus::vacuous, Json{{"note", e.what()}});
      }
    }
  }

  const ExpansionNode tree = expansion_tree(f, opt.caps);
  const DicriticalSet dic = dicritical_series(f, opt.caps);
  for (const auto& u : dic.unresolved) v.unresolved.push_back(Json{{"series", u.series.to_string()}, {"reason", u.reason}});

  WindowPool pool;
  visit(tree, [&](const ExpansionNode& n) { pool.add(n.series, "tree"); });

  const ParamSeries root = ParamSeries::root();
  for (const auto& entry : dic.series) {
    const ParamSeries& phi = entry.series;
    const std::string subject = phi.to_string();
    std::optional<AssociatedSequence> seq;
    try {
      seq = associated_sequence(root, phi, f);
    } catch (const VerificationFailure& e) {
      push(v, "associated_sequence", subject, CheckStatus::fail, Json{{"note", e.what()}});
      continue;
    }
    for (const auto& lv : seq->levels) pool.add(lv.series, "sequence");
    for (const auto& s : horizontal_q_prefixes(f, phi)) pool.add(s, "horizontal_Q_prefix");
    for (const auto& s : horizontal_q_prefixes(swapped(f), phi)) pool.add(s, "horizontal_P_prefix");
    const RootIndexData rid = root_index_data(*seq, f);

    if (want("lemma2")) push_report(v, "lemma2", subject, check_lemma2(*seq, rid));
    if (want("eq9")) push_report(v, "eq9", subject, check_eq9(*seq));

    if (want("theorem1") || want("lemma4")) {
      for (size_t i = 0; i + 1 < seq->levels.size(); ++i) {
        const ParamSeries& psi = seq->levels[i].series;
        const Theorem1Certificate cert = verify_theorem1(f, psi, phi);
        const std::string sub = psi.to_string() + " < " + subject;
        if (want("theorem1")) {
          const CheckStatus st = !cert.hypothesis_met ? CheckStatus::vacuous
                                 : cert.counterexample() ? CheckStatus::fail
                                                         : CheckStatus::pass;
          push(v, "theorem1", sub, st, theorem1_json(cert));
        }
        if (want("lemma4")) {
          if (!cert.hypothesis_met) {
            push(v, "lemma4", sub, CheckStatus::vacuous, Json{{"note", "theorem 1 hypothesis not met"}});
          } else {
            const AssociatedSequence tail = associated_sequence(psi, phi, f);
            push_report(v, "lemma4", sub, check_lemma4(tail, root_index_data(tail, f)));
          }
        }
      }
    }

    if (want("theorem2")) {
      const LeadingData& l = entry.lead;
      if (l.a == 0 && l.b < 0) {
        const Theorem2Certificate cert = verify_theorem2(f, phi);
        push(v, "theorem2", subject, cert.ok() ? CheckStatus::pass : CheckStatus::fail, theorem2_json(cert));
      } else if (l.b == 0 && l.a < 0) {
        const Theorem2Certificate cert = verify_theorem2(swapped(f), phi);
        Json data = theorem2_json(cert);
        data["note"] = "roles of P and Q exchanged";
        push(v, "theorem2", subject + " (P,Q exchanged)", cert.ok() ? CheckStatus::pass : CheckStatus::fail, data);
      } else {
        push(v, "theorem2", subject, CheckStatus::vacuous, Json{{"note", "not of the shape a = 0, b < 0"}});
      }
    }
  }

  for (const auto& [origin, w] : pool.items) {
    const LeadingData l = leading_data(f, w);
    if (want("lemma3") && l.a > 0 && l.b > 0 && l.j.degree() == 0) {
      const CheckReport r = check_lemma3(l, kSigma);
      Json data = report_json(r);
      data["origin"] = origin;
      data["lead"] = lead_json(l);
      push(v, "lemma3", w.to_string(), r.status, data);
      const DeltaData dd = delta(l);
      if (dd.exponent_lhs == dd.exponent_rhs) sigma_seen.insert(ratio_of(dd.delta, dd.mj));
    }
    if (want("section5")) {
      for (int side = 0; side < 2; ++side) {
        const LeadingData ls = side == 0 ? l : swapped(l);
        if (!(ls.a > 0 && ls.b == 0 && ls.q.degree() > 0)) continue;
        const CheckReport r = check_section5_identity(ls, kSigmaPrime);
        Json data = report_json(r);
        data["origin"] = origin;
        data["lead"] = lead_json(ls);
        if (side == 1) data["note"] = "roles of P and Q exchanged";
        push(v, "section5", w.to_string() + (side == 1 ? " (P,Q exchanged)" : ""), r.status, data);
        sigma_prime_seen.insert(ratio_of(ls.j * Scalar(ls.mult), ls.p * ls.q.derivative() * Scalar(ls.a)));
      }
    }
  }

  if (want("eq4")) {
    if (!f.jac.is_zero() && f.jac.is_constant()) {
      const ValueSet vs = nonproper_value_set(f, opt.caps);
      CheckReport r = check_eq4(vs.components, f);
      if (vs.lower_bound()) r.note += (r.note.empty() ? "" : "; ") + std::string("value set is a lower bound");
      push_report(v, "eq4", "map", r);
    } else {
      push(v, "eq4", "map", CheckStatus::vacuous, Json{{"note", "Jacobian is not a nonzero constant"}});
    }
  }

  v.signs = Json{{"sigma", kSigma},
                 {"sigma_prime", kSigmaPrime},
                 {"observed_sigma", Json(std::vector<std::string>(sigma_seen.begin(), sigma_seen.end()))},
                 {"observed_sigma_prime",
                  Json(std::vector<std::string>(sigma_prime_seen.begin(), sigma_prime_seen.end()))}};
  return v;
}

// ---- oracle ----

OracleRun oracle_run(const MapPair& f, const ValueSet& vs, const RunOptions& opt) {
  OracleRun out;
  static const std::vector<Scalar> kParams{Scalar(-2), Scalar(Rational(-1, 2)), Scalar(0), Scalar(1),
                                           Scalar(1, 1)};
  Json comps = Json::array();
  for (const auto& comp : vs.components) {
    Json samples = Json::array();
    for (int k = 0; k < opt.samples; ++k) {
      const Scalar c = k < static_cast<int>(kParams.size()) ? kParams[static_cast<size_t>(k)] : Scalar(k);
      const SampleReport rep = branch_limit_sample(f, comp.source, c, opt.radii, opt.tol);
      out.all_converged = out.all_converged && rep.converged;
      samples.push_back(Json{{"c", scalar_json(c)},
                             {"radii", rep.radii},
                             {"errors", rep.errors},
                             {"converged", rep.converged},
                             {"target", Json::array({Json::array({rep.target.first.real(), rep.target.first.imag()}),
                                                     Json::array({rep.target.second.real(), rep.target.second.imag()})})}});
    }
    comps.push_back(Json{{"source", comp.source.to_string()}, {"samples", samples}});
  }

  std::vector<ParamSeries> along;
  visit(expansion_tree(f, opt.caps), [&](const ExpansionNode& n) {
    if (n.children.empty()) along.push_back(n.series);
  });
  const ProbeReport probe = properness_probe(f, opt.probe_samples, opt.probe_radius, along, opt.seed);
  out.probe_consistent = probe.has_cluster() == !vs.components.empty();
  Json limits = Json::array();
  for (const auto& [u, w] : probe.limits) {
    limits.push_back(Json::array({Json::array({u.real(), u.imag()}), Json::array({w.real(), w.imag()})}));
  }
  out.json = Json{{"components", comps},
                  {"probe",
                   Json{{"samples", probe.samples},
                        {"random_samples", probe.random_samples},
                        {"series_samples", probe.series_samples},
                        {"bounded", probe.bounded},
                        {"bound", probe.bound},
                        {"radius", opt.probe_radius},
                        {"seed", opt.seed},
                        {"limits", limits},
                        {"consistent_with_value_set", out.probe_consistent}}}};
  return out;
}

Json corpus_report(const RunOptions& opt) {
  Json maps = Json::array();
  Json totals = Json::object();
  bool any_failed = false;
  for (const auto& entry : corpus()) {
    auto [p, q] = parse_map(entry.text);
    const MapPair f = normalize_monic(p, q);
    const ValueSet vs = nonproper_value_set(f, opt.caps);
    const Verification ver = verify_map(f, {"all"}, opt);
    const OracleRun orc = oracle_run(f, vs, opt);
    maps.push_back(Json{{"name", entry.name},
                        {"kind", entry.kind},
                        {"input", entry.text},
                        {"map", map_json(f)},
                        {"valueset", valueset_json(vs)},
                        {"checks", ver.checks},
                        {"counters", ver.counters},
                        {"signs", ver.signs},
                        {"unresolved", ver.unresolved},
                        {"failed", ver.failed},
                        {"oracle", orc.json}});
    any_failed = any_failed || ver.failed;
    for (const auto& [check, counts] : ver.counters.items()) {
      for (const auto& [status, n] : counts.items()) {
        Json& slot = totals[check][status];
        slot = (slot.is_null() ? 0L : slot.get<long>()) + n.get<long>();
      }
    }
  }
  return Json{{"corpus", maps},
              {"signs", Json{{"sigma", kSigma}, {"sigma_prime", kSigmaPrime}}},
              {"summary", Json{{"counters", totals}, {"failed", any_failed}}}};
}

}  // namespace npv
