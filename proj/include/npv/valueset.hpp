#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "npv/classify.hpp"
#include "npv/expansion.hpp"

namespace npv {

class PreconditionFailed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---- value set ----

struct DicriticalEntry {
  ParamSeries series = ParamSeries::root();
  LeadingData lead;
};

struct UnresolvedLeaf {
  ParamSeries series = ParamSeries::root();
  std::string reason;
};

struct DicriticalSet {
  std::vector<DicriticalEntry> series;
  // Depth-capped nodes and root-free factors that were not expanded.
  std::vector<UnresolvedLeaf> unresolved;
  bool complete() const { return unresolved.empty(); }
};

// Dicritical leaves of the expansion tree, one per conjugacy class under
// x^(1/m) -> zeta * x^(1/m).
DicriticalSet dicritical_series(const MapPair& f, const ExpansionCaps& caps = {});

struct ValueSetComponent {
  UniPoly u;
  UniPoly v;
  ParamSeries source = ParamSeries::root();
  // The coordinate is the constant 0 because its exponent is negative.
  bool u_vanishes = false;
  bool v_vanishes = false;
  // Further dicritical series with the same image.
  std::vector<ParamSeries> merged;
};

struct ValueSet {
  std::vector<ValueSetComponent> components;
  std::vector<UnresolvedLeaf> unresolved;
  // Some branch of the tree was not explored, so this may miss components.
  bool lower_bound() const { return !unresolved.empty(); }
};

ValueSet nonproper_value_set(const MapPair& f, const ExpansionCaps& caps = {});

// Whether the curves s -> (u1(s), v1(s)) and s -> (u2(s), v2(s)) coincide.
// Both parameterizations must be nonconstant.
bool same_image(const UniPoly& u1, const UniPoly& v1, const UniPoly& u2, const UniPoly& v2);

// ---- check reports ----

enum class CheckStatus { pass, fail, vacuous };
const char* to_string(CheckStatus s);

struct CheckItem {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct CheckReport {
  std::string check;
  CheckStatus status = CheckStatus::vacuous;
  std::vector<CheckItem> items;
  std::string note;

  void add(std::string name, bool ok, std::string detail = {});
  // pass/fail from the items, vacuous when there are none.
  void settle();
  bool ok() const { return status != CheckStatus::fail; }
};

// ---- theorem certificates ----

struct Theorem1Certificate {
  ParamSeries psi = ParamSeries::root();
  ParamSeries phi = ParamSeries::root();
  long M = 0, d = 0, e = 0, N = 0, D = 0;
  // Every C with lc(p_phi) = lc(p_psi) C^d and lc(q_phi) = lc(q_psi) C^e.
  std::vector<Scalar> C;
  bool hypothesis_met = false;
  bool conclusion_i_ok = false;
  bool conclusion_ii_ok = false;
  std::string note;

  bool counterexample() const { return hypothesis_met && !(conclusion_i_ok && conclusion_ii_ok); }
};

// Hypothesis: a_psi > 0, b_psi > 0, deg j_psi = 0. The conclusions are
// evaluated whenever the numbers make sense, met or not.
Theorem1Certificate verify_theorem1(const LeadingData& psi_lead, const LeadingData& phi_lead);
Theorem1Certificate verify_theorem1(const MapPair& f, const ParamSeries& psi, const ParamSeries& phi);

struct Theorem2Certificate {
  ParamSeries phi = ParamSeries::root();
  bool phi_singular = false;
  std::optional<ParamSeries> witness_psi;
  bool witness_horizontal_Q = false;
  bool witness_singular = false;
  // Every prefix of phi that was examined as a witness.
  std::vector<ParamSeries> candidates;

  bool ok() const { return phi_singular || (witness_psi && witness_horizontal_Q && witness_singular); }
};

// Requires phi dicritical with a = 0 and b < 0 (else PreconditionFailed).
// Always searches for the prefix witness, even when phi is singular.
Theorem2Certificate verify_theorem2(const MapPair& f, const ParamSeries& phi);

// Prefixes psi < phi where Q is horizontal, highest exponent first.
std::vector<ParamSeries> horizontal_q_prefixes(const MapPair& f, const ParamSeries& phi);

// ---- lemma checks ----

CheckReport check_lemma2(const AssociatedSequence& seq, const RootIndexData& data);

// Requires a > 0, b > 0 and deg j = 0. sigma is the global sign in
// Delta = sigma * m * j.
CheckReport check_lemma3(const LeadingData& lead, int sigma);

// Requires a > 0, b = 0 and deg q > 0. Checks m*j = sigma_prime * a * p * q'.
CheckReport check_section5_identity(const LeadingData& lead, int sigma_prime);

struct Lemma4Level {
  long a = 0, b = 0;
  long nS = 0, nT = 0, nS0 = 0, nT0 = 0;
  UniPoly pbar, qbar;
};

// Checks (a)-(c) on levels 0..K-1 against d/e.
CheckReport check_lemma4(const std::vector<Lemma4Level>& levels, long d, long e);
// Builds the levels from a chain; requires a_0, b_0 > 0 and a constant j_0.
CheckReport check_lemma4(const AssociatedSequence& seq, const RootIndexData& data);

// Requires the final level to have a = 0 and deg p > 0, or b = 0 and
// deg q > 0 (then the roles of P and Q are exchanged).
CheckReport check_eq9(const AssociatedSequence& seq);

// Requires a nonzero constant Jacobian.
CheckReport check_eq4(const std::vector<ValueSetComponent>& components, const MapPair& f);
CheckReport check_eq4(const std::vector<ValueSetComponent>& components, long deg_P, long deg_Q);

// Multiplies out lc * prod (y - branch) and compares with F on every
// monomial the truncation cannot affect.
CheckReport check_newton_factorization(const BiPoly& f, const std::vector<ConcreteBranch>& branches);

}  // namespace npv
