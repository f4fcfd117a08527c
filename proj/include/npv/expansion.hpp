#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "npv/classify.hpp"
#include "npv/puiseux.hpp"
#include "npv/roots.hpp"

namespace npv {

// All Newton-Puiseux roots at infinity of F (monic in y), conjugates listed
// separately and repeated by multiplicity, so exactly deg F branches come
// back. Terms are kept down to exponent 1 - depth_k. Throws
// ExtensionRequired when a characteristic polynomial does not split over Q(i).
std::vector<ConcreteBranch> curve_branches(const BiPoly& f, long depth_k);
// Same with an explicit exponent cutoff.
std::vector<ConcreteBranch> curve_branches_to(const BiPoly& f, const Rational& cutoff);

enum class NodeStatus { open, dicritical, dead, depth_capped };
const char* to_string(NodeStatus s);

struct ExpansionCaps {
  long max_mult = 12;
  long max_k = 64;
  int max_depth = 32;
};

struct ExpansionNode {
  ParamSeries series = ParamSeries::root();
  LeadingData lead;
  // Coefficient fixed in the parent's parameter slot to reach this node.
  std::optional<Scalar> chosen_c;
  std::vector<ExpansionNode> children;
  NodeStatus status = NodeStatus::open;
  int depth = 0;
  // Factors of p*q with no root in Q(i) whose roots could still lead to a
  // dicritical series. Their subtrees are unexplored.
  std::vector<UniPoly> unresolved_factors;
};

// Whether some strict descendant of a node with this leading data can be
// dicritical. A coordinate with positive exponent and constant leading
// polynomial keeps both forever, which rules out max(a, b) = 0.
bool may_reach_dicritical(const LeadingData& lead);

ExpansionNode expansion_tree(const MapPair& f, const ExpansionCaps& caps = {});

// Depth-first visit in canonical child order.
template <class Fn>
void visit(const ExpansionNode& node, Fn&& fn) {
  fn(node);
  for (const auto& child : node.children) visit(child, fn);
}

class NotARefinement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SequenceLevel {
  ParamSeries series = ParamSeries::root();
  // c_i: coefficient of phi at this level's parameter exponent. Absent at
  // the final level, whose parameter stays free.
  std::optional<Scalar> c;
  LeadingData lead;
  // p_i*q_i has both the root 0 and a nonzero root while c_i = 0.
  bool mixed_tie = false;

  Rational n_over_m() const { return Rational(1 - series.param_exponent()); }
};

struct AssociatedSequence {
  std::vector<SequenceLevel> levels;
  size_t K() const { return levels.size() - 1; }
};

// The longest chain psi = phi_0 < phi_1 < ... < phi_K = phi whose
// intermediate levels are exactly the exponents where p or q stops being a
// monomial. Throws NotARefinement, or VerificationFailure if the chain
// violates the level conditions.
AssociatedSequence associated_sequence(const ParamSeries& psi, const ParamSeries& phi,
                                       const MapPair& f);

struct LevelRootData {
  // Branch indices (empty in cardinality mode).
  std::vector<size_t> S, T, S0, T0;
  long nS = 0, nT = 0, nS0 = 0, nT0 = 0;
  Scalar A, B;
  UniPoly pbar, qbar;
  // p_i == A_i * pbar_i * (s - c_i)^#S0_i, and likewise for q.
  bool p_identity = false;
  bool q_identity = false;
};

struct RootIndexData {
  // True when branches could not be computed and the cardinalities were
  // read off the leading polynomials instead.
  bool inferred = false;
  std::string note;
  std::vector<ConcreteBranch> p_branches;
  std::vector<ConcreteBranch> q_branches;
  std::vector<LevelRootData> levels;
};

RootIndexData root_index_data(const AssociatedSequence& seq, const MapPair& f);

// Whether a branch lies in the window of a series: it agrees with the fixed
// part above the parameter exponent. Returns its coefficient at the
// parameter exponent when it does.
std::optional<Scalar> branch_in_window(const ConcreteBranch& branch, const ParamSeries& window);

}  // namespace npv
