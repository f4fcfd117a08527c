#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npv/corpus.hpp"
#include "npv/parse.hpp"
#include "npv/report.hpp"
#include "support.hpp"

using namespace npv;

namespace {

size_t error_position(std::string_view text) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse_poly") {
  const BiPoly f = parse_poly("x*y + y^2");
  CHECK(f.terms().size() == 2);
  CHECK(f.coeff(1, 1) == Scalar(1));
  CHECK(f.coeff(0, 2) == Scalar(1));

  const BiPoly g = parse_poly("1/2*x^2 - i*y");
  CHECK(g.coeff(2, 0) == Scalar(Rational(1, 2)));
  CHECK(g.coeff(0, 1) == Scalar(0, -1));

  CHECK(parse_poly("(x + y)^2") == parse_poly("x^2 + 2*x*y + y^2"));
  CHECK(parse_poly("  3i * x ") == BiPoly::term(Scalar(0, 3), 1, 0));
  CHECK(parse_poly("5i*y") == BiPoly::term(Scalar(0, 5), 0, 1));
  CHECK(parse_poly("(x - 1)/4") == parse_poly("1/4*x - 1/4"));
  CHECK(parse_poly("-(-x)") == BiPoly::x());
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_position("x**y") == 2);
  CHECK(error_position("x + z") == 4);
  CHECK(error_position("x/(y)") == 2);
  CHECK(error_position("(x + y") == 6);
  // whole-expression errors point at the start
  CHECK(error_position("x^(1/2)") == 0);
  CHECK_THROWS_WITH_AS(parse_poly("x^(1/2)"), doctest::Contains("non-negative integer powers"), ParseError);
  CHECK(error_position("") == 0);
  CHECK_THROWS_AS(parse_poly("x/0"), ParseError);
  try {
    parse_poly("x**y");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 2") != std::string::npos);
  }
}

TEST_CASE("parse_series and scalars") {
  const ParamSeries phi = parse_series("-x + s*x^(-1)");
  CHECK(phi == refine(ParamSeries::root(), -1, Rational(-1)));
  CHECK(parse_series("x^(1/2) + 2 + s*x^(-1/2)").param_exponent() == Rational(-1, 2));
  CHECK(parse_series("s").param_exponent() == 0);
  CHECK_THROWS_AS(parse_series("x + y"), ParseError);
  CHECK_THROWS_AS(parse_series("x"), ParseError);
  CHECK_THROWS_AS(parse_series("s + s*x^(-1)"), ParseError);
  CHECK_THROWS(parse_series("x^(-1) + s"));  // parameter must sit below the fixed terms

  CHECK(parse_scalar("-1+2i") == Scalar(-1, 2));
  CHECK(parse_scalar("-i/2") == Scalar(0, Rational(-1, 2)));
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK_THROWS_AS(parse_rational("i"), ParseError);
}

TEST_CASE("parse_map") {
  auto [p, q] = parse_map("x + y; x*y + y^2");
  CHECK(p == parse_poly("x + y"));
  CHECK(q == parse_poly("x*y + y^2"));
  CHECK_THROWS_AS(parse_map("x + y"), ParseError);
}

TEST_CASE("text forms round-trip") {
  for (const CorpusMap& m : corpus()) {
    auto [p, q] = parse_map(m.text);
    CHECK(parse_poly(p.to_string()) == p);
    CHECK(parse_poly(q.to_string()) == q);
    const MapPair f = normalize_monic(p, q);
    CHECK(parse_poly(f.jac.to_string()) == f.jac);
  }
  for (const Scalar& c : {Scalar(Rational(1, 3), Rational(5, 7)), Scalar(0, -1), Scalar(Rational(-3, 2))}) {
    CHECK(parse_scalar(c.to_string()) == c);
  }
  for (const char* s : {"-x + s*x^(-1)", "x^(1/2) + 1/2 - 1/8*x^(-1/2) + s*x^(-3/2)", "s*x"}) {
    CHECK(parse_series(parse_series(s).to_string()) == parse_series(s));
  }
}

TEST_CASE("corpus") {
  const auto c = corpus();
  REQUIRE(c.size() >= 10);
  CHECK(c[0].name == "F1");
  int random = 0;
  for (const auto& m : c) {
    auto [p, q] = parse_map(m.text);
    CHECK(p.degree() <= 4);
    CHECK(q.degree() <= 4);
    if (m.kind == "random") ++random;
  }
  CHECK(random >= 5);
  CHECK(corpus()[7].text == c[7].text);
}

TEST_CASE("report encoders") {
  CHECK(scalar_json(Scalar(-1, 2)) == "-1+2i");
  CHECK(poly_json(npv::testing::uni({0, -1})) == Json::array({"0", "-1"}));
  CHECK(poly_json(UniPoly()) == Json::array({"0"}));
  const Json m = map_json(npv::testing::map_of("x; x*y"));
  CHECK(m["shear"] == 1);
  CHECK(check_names().count("theorem1") == 1);
  CHECK(check_names().count("factorization") == 1);
}
