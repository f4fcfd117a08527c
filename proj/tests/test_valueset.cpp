#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "npv/expansion.hpp"
#include "npv/valueset.hpp"
#include "support.hpp"

using namespace npv;
using npv::testing::lead_of;
using npv::testing::map_of;
using npv::testing::series;
using npv::testing::uni;

namespace {

const UniPoly kXi = uni({0, 1});

bool item_ok(const CheckReport& r, const std::string& name) {
  auto it = std::find_if(r.items.begin(), r.items.end(), [&](const CheckItem& c) { return c.name == name; });
  REQUIRE_MESSAGE(it != r.items.end(), name);
  return it->ok;
}

SequenceLevel level(const ParamSeries& s, std::optional<Scalar> c, const LeadingData& lead) {
  SequenceLevel lv;
  lv.series = s;
  lv.c = std::move(c);
  lv.lead = lead;
  return lv;
}

}  // namespace

TEST_CASE("dicritical series") {
  SUBCASE("F2") {
    const DicriticalSet d = dicritical_series(map_of("x + y; x*y + y^2"));
    CHECK(d.complete());
    REQUIRE(d.series.size() == 1);
    CHECK(d.series[0].series == series("-x + s*x^(-1)"));
  }
  SUBCASE("automorphism") {
    const DicriticalSet d = dicritical_series(map_of("x + y; y"));
    CHECK(d.series.empty());
    CHECK(d.complete());
  }
  SUBCASE("F3p") {
    const DicriticalSet d = dicritical_series(map_of("x + y + x*y + y^2; x*y + y^2"));
    REQUIRE(d.series.size() == 1);
    CHECK(d.series[0].series == series("-x + s*x^(-1)"));
    CHECK(d.series[0].lead.a == 0);
    CHECK(d.series[0].lead.b == 0);
  }
  SUBCASE("conjugate windows are merged") {
    const DicriticalSet d = dicritical_series(map_of("y^2 - x; y^3 - x*y"));
    REQUIRE(d.series.size() == 1);
    CHECK(d.series[0].lead.mult == 2);
  }
}

TEST_CASE("non-proper value set") {
  SUBCASE("F2: the line u = 0") {
    const ValueSet vs = nonproper_value_set(map_of("x + y; x*y + y^2"));
    CHECK_FALSE(vs.lower_bound());
    REQUIRE(vs.components.size() == 1);
    CHECK(vs.components[0].u_vanishes);
    CHECK(vs.components[0].u.is_zero());
    CHECK(same_image(vs.components[0].u, vs.components[0].v, UniPoly(), uni({0, -1})));
  }
  SUBCASE("F3p: the diagonal") {
    const ValueSet vs = nonproper_value_set(map_of("x + y + x*y + y^2; x*y + y^2"));
    REQUIRE(vs.components.size() == 1);
    CHECK(same_image(vs.components[0].u, vs.components[0].v, uni({0, -1}), uni({0, -1})));
  }
  SUBCASE("proper maps") {
    CHECK(nonproper_value_set(map_of("x; y^2")).components.empty());
    CHECK(nonproper_value_set(map_of("x + y; y")).components.empty());
  }
  SUBCASE("every component is a curve") {
    for (const char* text : {"x + y; x*y + y^2", "x*y + y^2; x + y", "x + y + x*y + y^2; x*y + y^2",
                             "x*y^2 + y; x*y"}) {
      for (const auto& c : nonproper_value_set(map_of(text)).components) {
        CHECK((c.u.degree() > 0 || c.v.degree() > 0));
      }
    }
  }
}

TEST_CASE("same_image") {
  // affine reparameterization s -> 2s + 1
  CHECK(same_image(kXi, kXi * kXi, uni({1, 2}), uni({1, 2}).pow(2)));
  CHECK_FALSE(same_image(kXi, kXi * kXi, kXi, kXi.pow(3)));
  CHECK(same_image(UniPoly(), kXi, UniPoly(), uni({5, -3})));
  CHECK_FALSE(same_image(UniPoly(), kXi, UniPoly(Scalar(1)), kXi));
  CHECK_FALSE(same_image(kXi, kXi, kXi, -kXi));
}

TEST_CASE("theorem 1 certificate") {
  SUBCASE("hypothesis not met on F3p") {
    const Theorem1Certificate c =
        verify_theorem1(map_of("x + y + x*y + y^2; x*y + y^2"), ParamSeries::root(), series("-x + s*x^(-1)"));
    CHECK_FALSE(c.hypothesis_met);
    CHECK(c.conclusion_i_ok);
    CHECK(c.conclusion_ii_ok);
    CHECK_FALSE(c.counterexample());
  }
  SUBCASE("synthetic pass with C = -1") {
    const UniPoly pp = kXi * uni({1, 1});
    const Theorem1Certificate c = verify_theorem1(lead_of(pp, 2, pp, 2, uni({1})),
                                                  lead_of(-kXi, 0, -kXi, 0, uni({3})));
    CHECK(c.hypothesis_met);
    CHECK(c.M == 2);
    CHECK(c.d == 1);
    CHECK(c.e == 1);
    CHECK(c.N == 2);
    CHECK(c.D == 1);
    REQUIRE(c.C.size() == 1);
    CHECK(c.C[0] == Scalar(-1));
    CHECK(c.conclusion_i_ok);
    CHECK(c.conclusion_ii_ok);
    CHECK_FALSE(c.counterexample());
  }
  SUBCASE("synthetic (2,3) data has N = 1 and C = -2") {
    const Theorem1Certificate c = verify_theorem1(lead_of(kXi.pow(2), 2, kXi.pow(3), 3, uni({1})),
                                                  lead_of(kXi.pow(2) * Scalar(4), 0, kXi.pow(3) * Scalar(-8), 0, uni({1})));
    CHECK(c.M == 1);
    CHECK(c.d == 2);
    CHECK(c.e == 3);
    CHECK(c.N == 1);
    CHECK(c.conclusion_i_ok);
    REQUIRE(c.C.size() == 1);
    CHECK(c.C[0] == Scalar(-2));
  }
  SUBCASE("synthetic degree failure") {
    const Theorem1Certificate c = verify_theorem1(lead_of(kXi.pow(2), 2, kXi.pow(2), 3, uni({1})),
                                                  lead_of(kXi.pow(2), 0, kXi.pow(3), 0, uni({1})));
    CHECK(c.hypothesis_met);
    CHECK_FALSE(c.conclusion_i_ok);
    CHECK(c.counterexample());
  }
  SUBCASE("synthetic leading-coefficient failure") {
    const Theorem1Certificate c = verify_theorem1(lead_of(kXi.pow(2), 2, kXi.pow(3), 3, uni({1})),
                                                  lead_of(kXi.pow(2) * Scalar(4), 0, kXi.pow(3) * Scalar(9), 0, uni({1})));
    CHECK(c.conclusion_i_ok);
    CHECK(c.C.empty());
    CHECK_FALSE(c.conclusion_ii_ok);
    CHECK(c.counterexample());
  }
  SUBCASE("synthetic exponent failure") {
    const Theorem1Certificate c = verify_theorem1(lead_of(kXi, 1, kXi, 1, uni({1})),
                                                  lead_of(kXi, 0, kXi, -1, uni({1})));
    CHECK_FALSE(c.conclusion_ii_ok);
  }
  CHECK_THROWS_AS(verify_theorem1(map_of("x + y; x*y + y^2"), ParamSeries::root(), series("s")), PreconditionFailed);
  CHECK_THROWS_AS(verify_theorem1(map_of("x + y; x*y + y^2"), series("x + s"), series("-x + s*x^(-1)")),
                  NotARefinement);
}

TEST_CASE("theorem 2 certificate") {
  const MapPair f = map_of("x*y + y^2; x + y");
  const Theorem2Certificate c = verify_theorem2(f, series("-x + s*x^(-1)"));
  CHECK(c.phi_singular);
  REQUIRE(c.witness_psi);
  CHECK(*c.witness_psi == series("-x + s"));
  CHECK(c.witness_horizontal_Q);
  CHECK(c.witness_singular);
  CHECK(c.ok());

  const LeadingData psi = leading_data(f, series("-x + s"));
  CHECK(psi.q == kXi);
  CHECK(psi.b == 0);
  CHECK(psi.a == 1);
  CHECK(psi.p.degree() == 1);
  CHECK(psi.j == -kXi);

  CHECK(horizontal_q_prefixes(f, series("-x + s*x^(-1)")) == std::vector<ParamSeries>{series("-x + s")});
  CHECK_THROWS_AS(verify_theorem2(map_of("x + y; x*y + y^2"), series("-x + s*x^(-1)")), PreconditionFailed);
}

TEST_CASE("lemma 2") {
  SUBCASE("F2 chain") {
    const MapPair f = map_of("x + y; x*y + y^2");
    const AssociatedSequence seq = associated_sequence(ParamSeries::root(), series("-x + s*x^(-1)"), f);
    const CheckReport r = check_lemma2(seq, root_index_data(seq, f));
    CHECK(r.status == CheckStatus::pass);
    CHECK(item_ok(r, "a_exponent[1]"));
    CHECK(seq.levels[1].lead.a == -1);
    CHECK(r.items.size() == 10);
  }
  SUBCASE("F3p chain") {
    const MapPair f = map_of("x + y + x*y + y^2; x*y + y^2");
    const AssociatedSequence seq = associated_sequence(ParamSeries::root(), series("-x + s*x^(-1)"), f);
    const RootIndexData data = root_index_data(seq, f);
    const CheckReport r = check_lemma2(seq, data);
    CHECK(r.status == CheckStatus::pass);
    // one P-branch and one Q-branch follow c = -1 at the top level
    CHECK(data.levels[0].nS0 == 1);
    CHECK(data.levels[0].nT0 == 1);
    CHECK(data.levels[0].nS == 2);
    CHECK(data.levels[0].nT == 2);
  }
  SUBCASE("K = 0") {
    const MapPair f = map_of("x + y; x*y + y^2");
    const AssociatedSequence seq = associated_sequence(series("-x + s*x^(-1)"), series("-x + s*x^(-1)"), f);
    CHECK(check_lemma2(seq, root_index_data(seq, f)).status == CheckStatus::vacuous);
  }
}

TEST_CASE("lemma 3") {
  SUBCASE("automorphism root window") {
    const CheckReport r = check_lemma3(leading_data(map_of("x + y; y"), ParamSeries::root()), 1);
    CHECK(r.status == CheckStatus::pass);
    CHECK(item_ok(r, "delta_is_sigma_mj"));
    CHECK(check_lemma3(leading_data(map_of("x + y; y"), ParamSeries::root()), -1).status == CheckStatus::fail);
  }
  SUBCASE("common zero") {
    const CheckReport r = check_lemma3(lead_of(kXi, 1, kXi, 1, uni({1}), 0, 1, 0), 1);
    CHECK(item_ok(r, "vanishing_criterion"));
    CHECK(item_ok(r, "proportionality"));
  }
  SUBCASE("no common zero") {
    const CheckReport r = check_lemma3(lead_of(uni({1, 1}), 1, uni({-1, 1}), 1, uni({2}), 0, 1, 0), 1);
    CHECK(item_ok(r, "vanishing_criterion"));
    CHECK(r.status == CheckStatus::pass);
  }
  SUBCASE("vanishing case") {
    // a + b = 4 > 2m - n + J = 2
    const CheckReport r = check_lemma3(lead_of(kXi, 2, kXi, 2, uni({1}), 0, 1, 0), 1);
    CHECK(item_ok(r, "delta_vanishes"));
  }
  SUBCASE("criterion violated") {
    const CheckReport r = check_lemma3(lead_of(kXi, 1, uni({1, 1}), 1, uni({1}), 0, 1, 0), 1);
    CHECK(r.status == CheckStatus::fail);
  }
  CHECK_THROWS_AS(check_lemma3(lead_of(kXi, 0, kXi, 1, uni({1})), 1), PreconditionFailed);
  CHECK_THROWS_AS(check_lemma3(lead_of(kXi, 1, kXi, 1, kXi), 1), PreconditionFailed);
}

TEST_CASE("horizontal-Q identity") {
  const LeadingData psi = leading_data(map_of("x*y + y^2; x + y"), series("-x + s"));
  const CheckReport r = check_section5_identity(psi, 1);
  CHECK(r.status == CheckStatus::pass);
  CHECK(psi.j * Scalar(psi.mult) == -kXi);
  CHECK(check_section5_identity(psi, -1).status == CheckStatus::fail);
  CHECK_THROWS_AS(check_section5_identity(leading_data(map_of("x + y; x*y + y^2"), series("-x + s*x^(-1)")), 1),
                  PreconditionFailed);
  // p constant and q linear: neither side varies
  const CheckReport flat = check_section5_identity(lead_of(uni({2}), 1, uni({3, 1}), 0, uni({2}), -1, 1, 0), 1);
  CHECK(item_ok(flat, "singular_iff_p_qdot_varies"));
  CHECK(flat.status == CheckStatus::pass);
}

TEST_CASE("lemma 4") {
  Lemma4Level lv;
  lv.a = 2;
  lv.b = 2;
  lv.nS = 2;
  lv.nT = 2;
  lv.nS0 = 1;
  lv.nT0 = 1;
  lv.pbar = uni({1, 1});
  lv.qbar = uni({1, 1});
  CHECK(check_lemma4({lv, lv}, 1, 1).status == CheckStatus::pass);

  Lemma4Level bad = lv;
  bad.b = 3;
  bad.nS = 3;
  bad.nT = 3;
  const CheckReport r = check_lemma4({bad}, 1, 1);
  CHECK(r.status == CheckStatus::fail);
  CHECK_FALSE(item_ok(r, "ratio[0]"));

  CHECK(check_lemma4({}, 2, 3).status == CheckStatus::vacuous);
  CHECK_THROWS_AS(check_lemma4({lv}, 2, 2), PreconditionFailed);
}

TEST_CASE("eq 9") {
  SUBCASE("F3p chain") {
    const MapPair f = map_of("x + y + x*y + y^2; x*y + y^2");
    const AssociatedSequence seq = associated_sequence(ParamSeries::root(), series("-x + s*x^(-1)"), f);
    const CheckReport r = check_eq9(seq);
    CHECK(r.status == CheckStatus::pass);
    CHECK(seq.levels[0].lead.p.eval(-1).is_zero());
  }
  SUBCASE("K = 0") {
    const MapPair f = map_of("x + y + x*y + y^2; x*y + y^2");
    const AssociatedSequence seq = associated_sequence(series("-x + s*x^(-1)"), series("-x + s*x^(-1)"), f);
    CHECK(check_eq9(seq).status == CheckStatus::vacuous);
  }
  SUBCASE("synthetic violation") {
    AssociatedSequence seq;
    seq.levels.push_back(level(ParamSeries::root(), Scalar(2), lead_of(uni({1, 1}), 1, uni({1, 1}), 1, uni({1}))));
    seq.levels.push_back(level(series("2*x + s"), std::nullopt, lead_of(kXi, 0, kXi, 0, uni({1}))));
    const CheckReport r = check_eq9(seq);
    CHECK(r.status == CheckStatus::fail);
    CHECK_FALSE(item_ok(r, "p_root[0]"));
    CHECK_FALSE(item_ok(r, "q_root[0]"));
    CHECK(item_ok(r, "a_positive[0]"));
  }
  SUBCASE("needs a horizontal end") {
    AssociatedSequence seq;
    seq.levels.push_back(level(ParamSeries::root(), std::nullopt, lead_of(kXi, 1, kXi, 1, uni({1}))));
    CHECK_THROWS_AS(check_eq9(seq), PreconditionFailed);
  }
}

TEST_CASE("eq 4") {
  CHECK(check_eq4({}, map_of("x + y; y")).status == CheckStatus::vacuous);
  ValueSetComponent c23;
  c23.u = kXi.pow(2);
  c23.v = kXi.pow(3);
  CHECK(check_eq4({c23}, 4, 6).status == CheckStatus::pass);
  ValueSetComponent c11;
  c11.u = kXi;
  c11.v = kXi;
  CHECK(check_eq4({c11}, 2, 3).status == CheckStatus::fail);
  CHECK_THROWS_AS(check_eq4({}, map_of("x + y; x*y + y^2")), PreconditionFailed);
}

TEST_CASE("newton factorization") {
  SUBCASE("exact branches") {
    for (const char* text : {"y^2 - x", "y^2 + x*y"}) {
      const BiPoly F = parse_poly(text);
      const CheckReport r = check_newton_factorization(F, curve_branches(F, 4));
      CHECK(r.status == CheckStatus::pass);
    }
  }
  SUBCASE("binomial series of sqrt(x^2 + 1)") {
    // x * sum binom(1/2, k) x^(-2k): 1, 1/2, -1/8, 1/16, -5/128
    const BiPoly F = parse_poly("y^2 - x^2 - 1");
    const std::vector<Rational> binom{1, Rational(1, 2), Rational(-1, 8), Rational(1, 16), Rational(-5, 128)};
    auto bs = curve_branches(F, 4);
    REQUIRE(bs.size() == 2);
    for (const auto& b : bs) {
      const Scalar sign = b.coeff_at(1);
      for (size_t k = 0; k < binom.size(); ++k) {
        const Rational e = 1 - 2 * static_cast<long>(k);
        if (e < *b.cutoff()) break;
        CHECK(b.coeff_at(e) == sign * Scalar(binom[k]));
      }
    }
    CHECK(check_newton_factorization(F, bs).status == CheckStatus::pass);

    // a wrong coefficient is caught
    TermMap t = bs[1].terms();
    t[Rational(-1)] = Scalar(1);
    const std::vector<ConcreteBranch> broken{bs[0], ConcreteBranch(t, bs[1].cutoff())};
    CHECK(check_newton_factorization(F, broken).status == CheckStatus::fail);
  }
  SUBCASE("wrong branch count") {
    const BiPoly F = parse_poly("y^2 - x");
    auto bs = curve_branches(F, 2);
    bs.pop_back();
    CHECK(check_newton_factorization(F, bs).status == CheckStatus::fail);
  }
}
