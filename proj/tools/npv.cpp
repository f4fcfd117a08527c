#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "npv/corpus.hpp"
#include "npv/parse.hpp"
#include "npv/report.hpp"

using namespace npv;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kInputError = 2, kUnresolved = 3 };

struct Cli {
  std::string map_text;
  std::string map_file;
  std::string format = "json";
  RunOptions opt;
  std::string branches_of = "P";
  std::string series_text;
  std::vector<std::string> what{"all"};
};

void emit(const Cli& cli, const Json& report, const std::string& text) {
  if (cli.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string poly_text(const UniPoly& p) { return p.to_string(); }

Json envelope(const MapPair& f, const std::string& command) {
  return Json{{"map", map_json(f)},
              {"command", command},
              {"result", nullptr},
              {"checks", Json::array()},
              {"signs", Json{{"sigma", kSigma}, {"sigma_prime", kSigmaPrime}}},
              {"unresolved", Json::array()}};
}

int run_branches(const Cli& cli, const MapPair& f) {
  const BiPoly& poly = cli.branches_of == "Q" ? f.Q : f.P;
  Json rep = envelope(f, "branches");
  std::ostringstream text;
  const auto branches = curve_branches(poly, cli.opt.depth_k);
  Json list = Json::array();
  text << "branches of " << cli.branches_of << " = " << poly.to_string() << "\n";
  for (const auto& b : branches) {
    list.push_back(branch_json(b));
    text << "  y = " << b.to_string() << "\n";
  }
  rep["result"] = Json{{"of", cli.branches_of}, {"depth_k", cli.opt.depth_k}, {"branches", list}};
  emit(cli, rep, text.str());
  return kOk;
}

void tree_text(const ExpansionNode& n, int indent, std::ostringstream& out) {
  out << std::string(static_cast<size_t>(indent), ' ') << n.series.to_string() << "  [" << to_string(n.status)
      << "] a=" << n.lead.a << "/" << n.lead.mult << " p=" << poly_text(n.lead.p) << " b=" << n.lead.b << "/"
      << n.lead.mult << " q=" << poly_text(n.lead.q) << " j=" << poly_text(n.lead.j) << "\n";
  for (const auto& h : n.unresolved_factors) {
    out << std::string(static_cast<size_t>(indent) + 2, ' ') << "unresolved factor " << h.to_string() << "\n";
  }
  for (const auto& c : n.children) tree_text(c, indent + 2, out);
}

int run_tree(const Cli& cli, const MapPair& f) {
  const ExpansionNode tree = expansion_tree(f, cli.opt.caps);
  Json rep = envelope(f, "tree");
  rep["result"] = tree_json(tree);
  bool unresolved = false;
  visit(tree, [&](const ExpansionNode& n) {
    if (n.status == NodeStatus::depth_capped) {
      rep["unresolved"].push_back(Json{{"series", n.series.to_string()}, {"reason", "expansion cap reached"}});
      unresolved = true;
    }
    for (const auto& h : n.unresolved_factors) {
      rep["unresolved"].push_back(Json{{"series", n.series.to_string()}, {"reason", "no root in Q(i) for factor " + h.to_string()}});
      unresolved = true;
    }
  });
  std::ostringstream text;
  tree_text(tree, 0, text);
  emit(cli, rep, text.str());
  return unresolved ? kUnresolved : kOk;
}

int run_classify(const Cli& cli, const MapPair& f) {
  const ParamSeries phi = parse_series(cli.series_text);
  const LeadingData lead = leading_data(f, phi);
  const SeriesClass cls = classify(lead);
  const DeltaData dd = delta(lead);
  Json rep = envelope(f, "classify");
  rep["result"] = Json{{"series", series_json(phi)},
                       {"lead", lead_json(lead)},
                       {"class", class_json(cls)},
                       {"delta", Json{{"delta", poly_json(dd.delta)},
                                      {"mj", poly_json(dd.mj)},
                                      {"exponent_lhs", dd.exponent_lhs},
                                      {"exponent_rhs", dd.exponent_rhs}}}};
  std::ostringstream text;
  text << "series " << phi.to_string() << "\n"
       << "  p=" << poly_text(lead.p) << " a=" << lead.a << "\n"
       << "  q=" << poly_text(lead.q) << " b=" << lead.b << "\n"
       << "  j=" << poly_text(lead.j) << " J=" << lead.J << " m=" << lead.mult << "\n"
       << "  horizontal_P=" << cls.horizontal_P << " horizontal_Q=" << cls.horizontal_Q
       << " dicritical=" << cls.dicritical << " singular=" << cls.singular << "\n"
       << "  delta=" << poly_text(dd.delta) << "\n";
  emit(cli, rep, text.str());
  return kOk;
}

int run_valueset(const Cli& cli, const MapPair& f) {
  const ValueSet vs = nonproper_value_set(f, cli.opt.caps);
  Json rep = envelope(f, "valueset");
  rep["result"] = valueset_json(vs);
  rep["unresolved"] = rep["result"]["unresolved"];
  std::ostringstream text;
  text << vs.components.size() << " component(s)" << (vs.lower_bound() ? " (lower bound)" : "") << "\n";
  for (const auto& c : vs.components) {
    text << "  (" << c.u.to_string() << ", " << c.v.to_string() << ")  from " << c.source.to_string() << "\n";
  }
  for (const auto& u : vs.unresolved) text << "  unresolved at " << u.series.to_string() << ": " << u.reason << "\n";
  emit(cli, rep, text.str());
  return vs.lower_bound() ? kUnresolved : kOk;
}

int run_verify(const Cli& cli, const MapPair& f) {
  const std::set<std::string> what(cli.what.begin(), cli.what.end());
  const Verification ver = verify_map(f, what, cli.opt);
  Json rep = envelope(f, "verify");
  rep["checks"] = ver.checks;
  rep["signs"] = ver.signs;
  rep["unresolved"] = ver.unresolved;
  rep["result"] = Json{{"counters", ver.counters}, {"failed", ver.failed}};
  std::ostringstream text;
  for (const auto& c : ver.checks) {
    text << c["status"].get<std::string>() << "  " << c["name"].get<std::string>() << "  "
         << c["subject"].get<std::string>() << "\n";
  }
  text << "sigma=" << kSigma << " sigma_prime=" << kSigmaPrime << "\n";
  emit(cli, rep, text.str());
  if (ver.failed) return kCounterexample;
  return ver.unresolved.empty() ? kOk : kUnresolved;
}

int run_oracle(const Cli& cli, const MapPair& f) {
  const ValueSet vs = nonproper_value_set(f, cli.opt.caps);
  const OracleRun orc = oracle_run(f, vs, cli.opt);
  Json rep = envelope(f, "oracle");
  rep["result"] = orc.json;
  rep["unresolved"] = valueset_json(vs)["unresolved"];
  std::ostringstream text;
  for (const auto& comp : orc.json["components"]) {
    text << "component from " << comp["source"].get<std::string>() << "\n";
    for (const auto& s : comp["samples"]) {
      text << "  c=" << s["c"].get<std::string>() << " final error=" << s["errors"].back().get<double>()
           << (s["converged"].get<bool>() ? " converged" : " NOT converged") << "\n";
    }
  }
  text << "probe: " << orc.json["probe"]["bounded"].get<int>() << "/" << orc.json["probe"]["samples"].get<int>()
       << " bounded, consistent=" << orc.probe_consistent << "\n";
  emit(cli, rep, text.str());
  return orc.all_converged && orc.probe_consistent ? kOk : kCounterexample;
}

int run_corpus(const Cli& cli) {
  const Json rep = corpus_report(cli.opt);
  std::ostringstream text;
  bool failed = false;
  for (const auto& m : rep["corpus"]) {
    failed = failed || m["failed"].get<bool>();
    text << m["name"].get<std::string>() << ": " << m["valueset"]["components"].size() << " component(s)"
         << (m["failed"].get<bool>() ? "  FAILED" : "") << "\n";
  }
  emit(cli, rep, text.str());
  return failed ? kCounterexample : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  cli.opt.seed = oracle_seed();
  CLI::App app{"Newton-Puiseux data at infinity and non-proper value sets of plane polynomial maps"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--map", cli.map_text, "the map as \"P; Q\"");
  app.add_option("--map-file", cli.map_file, "file holding the map as \"P; Q\"");
  app.add_option("--format", cli.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-mult", cli.opt.caps.max_mult, "expansion cap on the multiplicity")->check(CLI::PositiveNumber);
  app.add_option("--max-k", cli.opt.caps.max_k, "expansion cap on the parameter index")->check(CLI::PositiveNumber);
  app.add_option("--max-depth", cli.opt.caps.max_depth, "expansion cap on the tree depth")->check(CLI::PositiveNumber);
  app.add_option("--seed", cli.opt.seed, "oracle seed (NPV_SEED overrides the default)");

  auto* branches = app.add_subcommand("branches", "Newton-Puiseux roots at infinity of P or Q");
  branches->add_option("--of", cli.branches_of, "which component")->check(CLI::IsMember({"P", "Q"}));
  branches->add_option("--depth", cli.opt.depth_k, "truncation order")->check(CLI::NonNegativeNumber);
  auto* tree = app.add_subcommand("tree", "expansion tree");
  auto* cls = app.add_subcommand("classify", "leading data and flags of one series");
  cls->add_option("--series", cli.series_text, "e.g. \"-x + s*x^(-1)\"")->required();
  auto* valueset = app.add_subcommand("valueset", "components of the non-proper value set");
  auto* verify = app.add_subcommand("verify", "run verifier checks");
  verify->add_option("--what", cli.what, "check names or all")->delimiter(',');
  verify->add_option("--depth", cli.opt.depth_k, "truncation order for factorization")->check(CLI::NonNegativeNumber);
  auto* oracle = app.add_subcommand("oracle", "numeric cross-checks");
  oracle->add_option("--samples", cli.opt.samples, "parameter samples per component")->check(CLI::PositiveNumber);
  oracle->add_option("--radii", cli.opt.radii, "increasing x-radii");
  oracle->add_option("--tol", cli.opt.tol, "final relative tolerance")->check(CLI::PositiveNumber);
  oracle->add_option("--probe-samples", cli.opt.probe_samples, "properness probe samples")->check(CLI::PositiveNumber);
  oracle->add_option("--probe-radius", cli.opt.probe_radius, "properness probe radius");
  auto* corpus_cmd = app.add_subcommand("corpus", "full report over the built-in corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (corpus_cmd->parsed()) return run_corpus(cli);

    if (!cli.map_file.empty()) {
      std::ifstream in(cli.map_file);
      if (!in) throw std::invalid_argument("cannot read " + cli.map_file);
      std::ostringstream buf;
      buf << in.rdbuf();
      cli.map_text = buf.str();
    }
    if (cli.map_text.empty()) throw std::invalid_argument("no map given; use --map or --map-file");
    auto [p, q] = parse_map(cli.map_text);
    const MapPair f = normalize_monic(p, q);
    if (f.jac.is_zero()) throw std::invalid_argument("the Jacobian vanishes identically");

    if (branches->parsed()) return run_branches(cli, f);
    if (tree->parsed()) return run_tree(cli, f);
    if (cls->parsed()) return run_classify(cli, f);
    if (valueset->parsed()) return run_valueset(cli, f);
    if (verify->parsed()) return run_verify(cli, f);
    if (oracle->parsed()) return run_oracle(cli, f);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ExtensionRequired& e) {
    std::cerr << "unresolved: " << e.what() << "\n";
    return kUnresolved;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
