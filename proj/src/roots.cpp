#include "npv/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>

namespace npv {

namespace {

using cld = std::complex<long double>;

// Common denominator of every rational component of p.
Integer common_denominator(const UniPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
  }
  return l;
}

std::vector<cld> approximate_roots(const UniPoly& p) {
  const int n = p.degree();
  std::vector<cld> a(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const auto& c = p.coeffs()[k];
    a[k] = cld(c.re().get_d(), c.im().get_d());
  }
  const cld lc = a[n];
  for (auto& v : a) v /= lc;
  long double bound = 1;
  for (int k = 0; k < n; ++k) bound = std::max(bound, 1 + std::abs(a[k]));

  auto eval = [&](const cld& z) {
    cld acc = 0;
    for (int k = n; k >= 0; --k) acc = acc * z + a[k];
    return acc;
  };

  std::vector<cld> z(static_cast<size_t>(n));
  const cld seed(0.4L, 0.9L);
  cld w = 1;
  for (int k = 0; k < n; ++k) {
    w *= seed;
    z[k] = w * (bound / 2);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (int k = 0; k < n; ++k) {
      cld denom = 1;
      for (int j = 0; j < n; ++j) {
        if (j != k) denom *= (z[k] - z[j]);
      }
      if (std::abs(denom) == 0) denom = cld(1e-30L, 0);
      cld delta = eval(z[k]) / denom;
      z[k] -= delta;
      change = std::max(change, std::abs(delta));
    }
    if (change < 1e-30L) break;
  }
  // Newton polish on the original (monic-normalized) polynomial.
  for (auto& r : z) {
    for (int iter = 0; iter < 8; ++iter) {
      cld f = 0, df = 0;
      for (int k = n; k >= 0; --k) {
        df = df * r + f;
        f = f * r + a[k];
      }
      if (std::abs(df) == 0) break;
      r -= f / df;
    }
  }
  return z;
}

bool fits(long double v) { return std::isfinite(v) && std::fabs(v) < 1e17L; }

Integer round_to_integer(long double v) {
  long long r = std::llroundl(v);
  return Integer(std::to_string(r));
}

// Exact roots of a squarefree polynomial of degree <= 2, or nullopt.
std::optional<std::vector<Scalar>> solve_low_degree(const UniPoly& p) {
  if (p.degree() == 1) return std::vector<Scalar>{-p.coeff(0) / p.coeff(1)};
  const Scalar& a = p.coeff(2);
  const Scalar& b = p.coeff(1);
  const Scalar& c = p.coeff(0);
  Scalar disc = b * b - Scalar(4) * a * c;
  auto root = exact_sqrt(disc);
  if (!root) return std::nullopt;
  Scalar two_a = Scalar(2) * a;
  return std::vector<Scalar>{(-b + *root) / two_a, (-b - *root) / two_a};
}

}  // namespace

ExtensionRequired::ExtensionRequired(UniPoly factor)
    : std::runtime_error("factor " + factor.to_string() + " has no roots in Q(i)"),
      factor_(std::move(factor)) {}

RootFactorization gaussian_roots(const UniPoly& p) {
  RootFactorization out;
  if (p.degree() <= 0) return out;

  std::vector<Scalar> found;
  UniPoly rest = squarefree_part(p);
  if (rest.coeff(0).is_zero()) {
    found.emplace_back(0);
    rest = divmod(rest, UniPoly::linear_factor(Scalar(0))).first;
  }

  while (rest.degree() > 2) {
    const Integer den = common_denominator(rest);
    const Scalar lc = rest.leading_coeff() * Scalar(Rational(den));
    const std::complex<long double> lc_approx(lc.re().get_d(), lc.im().get_d());
    bool progress = false;
    for (const auto& z : approximate_roots(rest)) {
      cld scaled = lc_approx * z;
      if (!fits(scaled.real()) || !fits(scaled.imag())) continue;
      Scalar candidate =
          Scalar(Rational(round_to_integer(scaled.real())), Rational(round_to_integer(scaled.imag()))) /
          lc;
      if (rest.eval(candidate).is_zero()) {
        found.push_back(candidate);
        rest = divmod(rest, UniPoly::linear_factor(candidate)).first;
        progress = true;
        break;
      }
    }
    if (!progress) break;
  }

  if (rest.degree() >= 1 && rest.degree() <= 2) {
    if (auto roots = solve_low_degree(rest)) {
      for (auto& r : *roots) found.push_back(std::move(r));
      rest = UniPoly(Scalar(1));
    }
  }
  if (rest.degree() >= 2) out.unresolved.push_back(rest.monic());

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (auto& r : found) {
    int mult = p.root_multiplicity(r);
    out.roots.emplace_back(std::move(r), mult);
  }
  return out;
}

std::vector<std::pair<Scalar, int>> gaussian_roots_or_throw(const UniPoly& p) {
  auto f = gaussian_roots(p);
  if (!f.complete()) throw ExtensionRequired(f.unresolved.front());
  return std::move(f.roots);
}

}  // namespace npv
