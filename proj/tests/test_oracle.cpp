#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "npv/oracle.hpp"
#include "npv/valueset.hpp"
#include "support.hpp"

using namespace npv;
using npv::testing::map_of;
using npv::testing::series;

TEST_CASE("limit samples along the F2 dicritical series") {
  const MapPair f = map_of("x + y; x*y + y^2");
  const ParamSeries phi = series("-x + s*x^(-1)");

  SUBCASE("closed form error 1/|x|") {
    // f(x, -x + 1/x) = (1/x, -1 + 1/x^2); the relative error is dominated by 1/x
    const SampleReport r = branch_limit_sample(f, phi, 1, {1e3, 1e6});
    REQUIRE(r.errors.size() == 2);
    CHECK(r.errors[0] == doctest::Approx(1e-3).epsilon(1e-3));
    CHECK(r.errors[1] == doctest::Approx(1e-6).epsilon(1e-3));
    CHECK(r.target.first == std::complex<double>(0, 0));
    CHECK(r.target.second == std::complex<double>(-1, 0));
  }
  SUBCASE("default ladder converges") {
    const SampleReport r = branch_limit_sample(f, phi, Scalar(1, 1), default_radii());
    CHECK(r.converged);
    CHECK(r.errors.back() <= 1e-6);
    CHECK(r.errors[0] > r.errors[1]);
    CHECK(r.errors[1] > r.errors[2]);
  }
  SUBCASE("zero parameter") {
    const SampleReport r = branch_limit_sample(f, phi, 0, default_radii());
    CHECK(r.target.first == std::complex<double>(0, 0));
    CHECK(r.target.second == std::complex<double>(0, 0));
    CHECK(r.converged);
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(branch_limit_sample(f, phi, 1, {1e5, 1e3}), std::invalid_argument);
    CHECK_THROWS_AS(branch_limit_sample(f, ParamSeries::root(), 1, default_radii()), std::invalid_argument);
  }
}

TEST_CASE("limit samples on a ramified window") {
  const MapPair f = map_of("y^2 - x; y^3 - x*y");
  const ValueSet vs = nonproper_value_set(f);
  REQUIRE(vs.components.size() == 1);
  // P = -2c x^(-1/2) + ..., so the error only falls like x^(-1/2)
  for (long c : {-3L, 2L}) {
    const SampleReport r = branch_limit_sample(f, vs.components[0].source, c, {1e4, 1e6, 1e8, 1e12, 1e16});
    CHECK(r.errors[0] > r.errors[1]);
    CHECK(r.errors[1] > r.errors[2]);
    CHECK(r.errors[2] == doctest::Approx(2e-4 * std::abs(c) / std::max(1.0, 2.0 * std::abs(c))).epsilon(1e-2));
    CHECK(r.converged);
    CHECK_FALSE(branch_limit_sample(f, vs.components[0].source, c, default_radii()).converged);
  }
}

TEST_CASE("overflow is reported per radius") {
  const MapPair f = map_of("x + y; x*y + y^2");
  const SampleReport r = branch_limit_sample(f, series("-x + s*x^(-1)"), 1, {1e3, 1e200});
  REQUIRE(r.overflow.size() == 2);
  CHECK_FALSE(r.overflow[0]);
}

TEST_CASE("properness probe") {
  const std::uint64_t seed = 20240611;
  SUBCASE("proper maps have no bounded cluster") {
    for (const char* text : {"x; y^2", "x + y; y"}) {
      const ProbeReport r = properness_probe(map_of(text), 64, 1e6, {}, seed);
      CHECK(r.samples == 64);
      CHECK_FALSE(r.has_cluster());
    }
  }
  SUBCASE("F2 clusters on the line u = 0") {
    const ProbeReport r = properness_probe(map_of("x + y; x*y + y^2"), 64, 1e6, {series("-x + s*x^(-1)")}, seed);
    CHECK(r.has_cluster());
    CHECK(r.series_samples > 0);
    for (const auto& [u, v] : r.limits) CHECK(std::abs(u) < 1e-3);
  }
  SUBCASE("seeded runs repeat") {
    const MapPair f = map_of("x + y; x*y + y^2");
    const ProbeReport a = properness_probe(f, 32, 1e6, {series("-x + s*x^(-1)")}, 5);
    const ProbeReport b = properness_probe(f, 32, 1e6, {series("-x + s*x^(-1)")}, 5);
    CHECK(a.bounded == b.bounded);
    CHECK(a.limits == b.limits);
  }
  CHECK(oracle_seed() == (std::getenv("NPV_SEED") ? std::strtoull(std::getenv("NPV_SEED"), nullptr, 10) : 20240611ULL));
}
