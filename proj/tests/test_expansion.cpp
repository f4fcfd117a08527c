#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "npv/expansion.hpp"
#include "support.hpp"

using namespace npv;
using npv::testing::map_of;
using npv::testing::series;
using npv::testing::uni;

namespace {

std::vector<std::string> branch_texts(const std::vector<ConcreteBranch>& bs) {
  std::vector<std::string> out;
  for (const auto& b : bs) out.push_back(b.to_string());
  return out;
}

std::vector<const ExpansionNode*> nodes_with(const ExpansionNode& root, NodeStatus status) {
  std::vector<const ExpansionNode*> out;
  visit(root, [&](const ExpansionNode& n) {
    if (n.status == status) out.push_back(&n);
  });
  return out;
}

}  // namespace

TEST_CASE("curve branches") {
  SUBCASE("y^2 - x") {
    auto bs = curve_branches(parse_poly("y^2 - x"), 4);
    REQUIRE(bs.size() == 2);
    CHECK(bs[0].mult() == 2);
    CHECK(bs[0].exact());
    CHECK(bs[0].coeff_at(Rational(1, 2)) == Scalar(-1));
    CHECK(bs[1].coeff_at(Rational(1, 2)) == Scalar(1));
    // each branch is a root: F(x, u(x)) vanishes identically
    for (const auto& b : bs) CHECK(expand_fixed(parse_poly("y^2 - x"), b.terms()).is_zero());
  }
  SUBCASE("x*y + y^2") {
    auto bs = curve_branches(parse_poly("x*y + y^2"), 4);
    CHECK(branch_texts(bs) == std::vector<std::string>{"-x", "0"});
  }
  SUBCASE("y") {
    auto bs = curve_branches(parse_poly("y"), 0);
    CHECK(branch_texts(bs) == std::vector<std::string>{"0"});
  }
  SUBCASE("repeated root is listed twice") {
    auto bs = curve_branches(parse_poly("y^2 + 2*x*y + x^2"), 3);
    REQUIRE(bs.size() == 2);
    CHECK(bs[0] == bs[1]);
  }
  SUBCASE("conjugates of a cube root") {
    // y^3 = x: three branches over Q(i) would need cube roots of unity
    CHECK_THROWS_AS(curve_branches(parse_poly("y^3 - x"), 2), ExtensionRequired);
    auto bs = curve_branches(parse_poly("y^4 - x"), 2);
    CHECK(bs.size() == 4);
  }
  SUBCASE("infinite branches truncate") {
    auto bs = curve_branches(parse_poly("y^2 - x^2 - 1"), 4);
    REQUIRE(bs.size() == 2);
    CHECK_FALSE(bs[0].exact());
    CHECK(bs[1].truncation_k() == std::optional<Rational>(4));
    CHECK(bs[1].coeff_at(Rational(-3)) == Scalar(Rational(-1, 8)));
  }
}

TEST_CASE("expansion tree of (x + y, xy + y^2)") {
  const ExpansionNode root = expansion_tree(map_of("x + y; x*y + y^2"));
  CHECK(root.series == ParamSeries::root());
  CHECK(root.lead.p * root.lead.q == uni({0, 1, 2, 1}));
  REQUIRE(root.children.size() == 2);
  const ExpansionNode& first = root.children[0];
  CHECK(first.chosen_c == std::optional<Scalar>(Scalar(-1)));
  CHECK(first.series == series("-x + s*x^(-1)"));
  CHECK(first.status == NodeStatus::dicritical);
  CHECK(first.lead.a == -1);
  CHECK(first.lead.b == 0);
  const ExpansionNode& second = root.children[1];
  CHECK(second.chosen_c == std::optional<Scalar>(Scalar(0)));
  CHECK(second.status == NodeStatus::dead);
  CHECK(nodes_with(root, NodeStatus::dicritical).size() == 1);
  CHECK(nodes_with(root, NodeStatus::depth_capped).empty());
}

TEST_CASE("proper maps have no dicritical node") {
  for (const char* text : {"x; y^2", "x + y; y", "2*y^2 + x; y"}) {
    const ExpansionNode root = expansion_tree(map_of(text));
    CHECK(nodes_with(root, NodeStatus::dicritical).empty());
    CHECK(nodes_with(root, NodeStatus::depth_capped).empty());
    visit(root, [](const ExpansionNode& n) {
      if (n.children.empty()) CHECK(n.status == NodeStatus::dead);
    });
  }
}

TEST_CASE("depth cap is a status") {
  ExpansionCaps caps;
  caps.max_depth = 1;
  const ExpansionNode root = expansion_tree(map_of("x + y + x*y + y^2; x*y + y^2"), caps);
  const auto capped = nodes_with(root, NodeStatus::depth_capped);
  REQUIRE(capped.size() == 1);
  CHECK(capped[0]->series == series("s"));
  CHECK(capped[0]->children.empty());
  CHECK(nodes_with(root, NodeStatus::dicritical).size() == 1);
  caps.max_depth = 0;
  CHECK_THROWS_AS(expansion_tree(map_of("x + y; y"), caps), std::invalid_argument);
}

TEST_CASE("expansion tree is deterministic") {
  const MapPair f = map_of("x + y + x*y + y^2; x*y + y^2");
  auto flatten = [](const ExpansionNode& root) {
    std::vector<std::string> out;
    visit(root, [&](const ExpansionNode& n) { out.push_back(n.series.to_string() + to_string(n.status)); });
    return out;
  };
  CHECK(flatten(expansion_tree(f)) == flatten(expansion_tree(f)));
}

TEST_CASE("may_reach_dicritical") {
  LeadingData l;
  l.p = UniPoly(Scalar(1));
  l.a = 1;
  l.q = uni({0, 1});
  l.b = 1;
  CHECK_FALSE(may_reach_dicritical(l));
  l.p = uni({1, 1});
  CHECK(may_reach_dicritical(l));
  l.a = -1;
  l.b = -1;
  CHECK_FALSE(may_reach_dicritical(l));
}

TEST_CASE("associated sequence") {
  SUBCASE("F2 chain skips the inert level") {
    const MapPair f = map_of("x + y; x*y + y^2");
    const AssociatedSequence seq = associated_sequence(ParamSeries::root(), series("-x + s*x^(-1)"), f);
    REQUIRE(seq.K() == 1);
    CHECK(seq.levels[0].series == ParamSeries::root());
    CHECK(seq.levels[0].c == std::optional<Scalar>(Scalar(-1)));
    CHECK(seq.levels[1].series == series("-x + s*x^(-1)"));
    CHECK_FALSE(seq.levels[1].c);
    CHECK(seq.levels[0].n_over_m() == 0);
    CHECK(seq.levels[1].n_over_m() == 2);
  }
  SUBCASE("trivial chain") {
    const MapPair f = map_of("x + y; x*y + y^2");
    const AssociatedSequence seq = associated_sequence(series("-x + s*x^(-1)"), series("-x + s*x^(-1)"), f);
    CHECK(seq.K() == 0);
  }
  SUBCASE("horizontal-Q prefix on the exchanged pair") {
    const MapPair f = map_of("x*y + y^2; x + y");
    const AssociatedSequence seq = associated_sequence(ParamSeries::root(), series("-x + s"), f);
    REQUIRE(seq.K() == 1);
    CHECK(seq.levels[0].c == std::optional<Scalar>(Scalar(-1)));
    CHECK(seq.levels[1].series == series("-x + s"));
  }
  SUBCASE("exponents strictly decrease") {
    const MapPair f = map_of("x + y + x*y + y^2; x*y + y^2");
    const AssociatedSequence seq = associated_sequence(ParamSeries::root(), series("-x + s*x^(-1)"), f);
    for (size_t i = 0; i + 1 < seq.levels.size(); ++i) {
      CHECK(seq.levels[i].series.param_exponent() > seq.levels[i + 1].series.param_exponent());
      CHECK(is_refinement(seq.levels[i].series, seq.levels[i + 1].series).holds);
    }
  }
  CHECK_THROWS_AS(associated_sequence(series("x^(1/2) + s"), series("-x + s*x^(-1)"), map_of("x + y; x*y + y^2")),
                  NotARefinement);
}

TEST_CASE("root index data on the F2 chain") {
  const MapPair f = map_of("x + y; x*y + y^2");
  const AssociatedSequence seq = associated_sequence(ParamSeries::root(), series("-x + s*x^(-1)"), f);
  const RootIndexData data = root_index_data(seq, f);
  CHECK_FALSE(data.inferred);
  REQUIRE(data.levels.size() == 2);
  const LevelRootData& l0 = data.levels[0];
  CHECK(l0.nS == 1);
  CHECK(l0.nS0 == 1);
  CHECK(l0.nT == 2);
  CHECK(l0.nT0 == 1);
  CHECK(l0.A == Scalar(1));
  CHECK(l0.B == Scalar(1));
  CHECK(l0.pbar == UniPoly(Scalar(1)));
  CHECK(l0.qbar == uni({0, 1}));
  CHECK(l0.p_identity);
  CHECK(l0.q_identity);
  CHECK(data.p_branches[l0.S[0]].to_string() == "-x");
  // level 1 degrees equal the matched-root counts of level 0
  CHECK(seq.levels[1].lead.p.degree() == l0.nS0);
  CHECK(seq.levels[1].lead.q.degree() == l0.nT0);
}

TEST_CASE("branch_in_window") {
  const ConcreteBranch b(TermMap{{Rational(1), Scalar(-1)}, {Rational(-1), Scalar(2)}}, std::nullopt);
  CHECK(branch_in_window(b, ParamSeries::root()) == std::optional<Scalar>(Scalar(-1)));
  CHECK(branch_in_window(b, series("-x + s")) == std::optional<Scalar>(Scalar(0)));
  CHECK(branch_in_window(b, series("-x + s*x^(-1)")) == std::optional<Scalar>(Scalar(2)));
  CHECK_FALSE(branch_in_window(b, series("x + s")));
}
