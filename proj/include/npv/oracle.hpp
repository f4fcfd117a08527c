#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "npv/mappair.hpp"
#include "npv/puiseux.hpp"

namespace npv {

struct SampleReport {
  std::vector<double> radii;
  std::vector<double> errors;       // relative, per radius; +inf on overflow
  std::vector<bool> overflow;
  std::pair<std::complex<double>, std::complex<double>> target;
  bool converged = false;
};

std::vector<double> default_radii();  // 1e3, 1e5, 1e8
constexpr double kDefaultTolerance = 1e-6;

// Evaluates f at x = t^m, y = phi(t^m, c) in 50-digit arithmetic for each
// x-radius and compares with the exact limit f_phi(c). Requires phi
// dicritical and increasing radii.
SampleReport branch_limit_sample(const MapPair& f, const ParamSeries& phi, const Scalar& c,
                                 const std::vector<double>& radii, double tol = kDefaultTolerance);

struct ProbeReport {
  int samples = 0;
  int random_samples = 0;
  int series_samples = 0;
  int bounded = 0;
  double bound = 0;
  // f at the larger radius for every sample that stayed bounded.
  std::vector<std::pair<std::complex<double>, std::complex<double>>> limits;
  double bounded_fraction() const { return samples ? static_cast<double>(bounded) / samples : 0.0; }
  bool has_cluster() const { return bounded > 0; }
};

// Seed from NPV_SEED when set, else a fixed default.
std::uint64_t oracle_seed();

// Samples points of norm about `radius` in random directions plus points
// along the given series with random parameter values, evaluates f there
// and at radius^2, and counts the samples whose image stays bounded.
ProbeReport properness_probe(const MapPair& f, int n_samples, double radius,
                             const std::vector<ParamSeries>& along, std::uint64_t seed);

}  // namespace npv
