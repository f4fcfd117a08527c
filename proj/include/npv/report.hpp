#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "npv/oracle.hpp"
#include "npv/valueset.hpp"

namespace npv {

using Json = nlohmann::json;

// Global signs in Delta = sigma*m*j and m*j = sigma_prime*a*p*q'.
constexpr int kSigma = 1;
constexpr int kSigmaPrime = 1;

struct RunOptions {
  ExpansionCaps caps;
  long depth_k = 4;
  std::vector<double> radii = default_radii();
  double tol = kDefaultTolerance;
  std::uint64_t seed = 20240611;
  int samples = 5;
  int probe_samples = 64;
  double probe_radius = 1e6;
};

Json scalar_json(const Scalar& c);
// Coefficient strings, constant term first.
Json poly_json(const UniPoly& p);
Json series_json(const ParamSeries& s);
Json branch_json(const ConcreteBranch& b);
Json lead_json(const LeadingData& lead);
Json class_json(const SeriesClass& c);
Json map_json(const MapPair& f);
Json tree_json(const ExpansionNode& node);
Json component_json(const ValueSetComponent& c);
Json valueset_json(const ValueSet& vs);
Json report_json(const CheckReport& r);
Json theorem1_json(const Theorem1Certificate& cert);
Json theorem2_json(const Theorem2Certificate& cert);

const std::set<std::string>& check_names();

struct Verification {
  Json checks = Json::array();
  // per check: pass / fail / vacuous counts
  Json counters = Json::object();
  Json signs = Json::object();
  Json unresolved = Json::array();
  bool failed = false;
};

// Runs the selected checks ("all" selects every one) on one map.
Verification verify_map(const MapPair& f, const std::set<std::string>& what, const RunOptions& opt);

// Limit samples on every value-set component plus a properness probe.
struct OracleRun {
  Json json;
  bool all_converged = true;
  bool probe_consistent = true;
};
OracleRun oracle_run(const MapPair& f, const ValueSet& vs, const RunOptions& opt);

// The whole corpus: value sets, verification summaries and oracle results.
Json corpus_report(const RunOptions& opt);

}  // namespace npv
