#include "npv/oracle.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>

#include "npv/classify.hpp"

namespace npv {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

Real to_real(const Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Complex to_big(const Scalar& s) { return Complex(to_real(s.re()), to_real(s.im())); }

Complex ipow(const Complex& z, long e) {
  if (e < 0) return Complex(1) / ipow(z, -e);
  Complex out(1), base = z;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Complex eval_poly(const BiPoly& f, const Complex& x, const Complex& y) {
  Complex out(0);
  for (const auto& [m, c] : f.terms()) out += to_big(c) * ipow(x, m.x) * ipow(y, m.y);
  return out;
}

// phi(t^m, c) with t real; only integer powers of t occur.
Complex eval_series(const ParamSeries& phi, const Real& t, const Complex& c) {
  const long m = phi.mult();
  Complex out(0);
  const Complex tc(t);
  for (const auto& [e, a] : phi.terms()) {
    out += to_big(a) * ipow(tc, Rational(e * m).get_num().get_si());
  }
  out += c * ipow(tc, Rational(phi.param_exponent() * m).get_num().get_si());
  return out;
}

double magnitude(const Complex& a, const Complex& b) {
  const Real n = sqrt(norm(a) + norm(b));
  return n.convert_to<double>();
}

std::complex<double> to_double(const Complex& z) {
  return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
}

}  // namespace

std::vector<double> default_radii() { return {1e3, 1e5, 1e8}; }

SampleReport branch_limit_sample(const MapPair& f, const ParamSeries& phi, const Scalar& c,
                                 const std::vector<double>& radii, double tol) {
  if (radii.empty()) throw std::invalid_argument("branch_limit_sample: no radii");
  for (size_t k = 0; k < radii.size(); ++k) {
    if (!(radii[k] > 0) || (k > 0 && radii[k] <= radii[k - 1])) {
      throw std::invalid_argument("branch_limit_sample: radii must be positive and increasing");
    }
  }
  const LeadingData lead = leading_data(f, phi);
  if (!classify(lead).dicritical) {
    throw std::invalid_argument("branch_limit_sample: " + phi.to_string() + " is not dicritical");
  }
  const Scalar u = lead.a == 0 ? lead.p.eval(c) : Scalar(0);
  const Scalar v = lead.b == 0 ? lead.q.eval(c) : Scalar(0);
  const Complex tu = to_big(u), tv = to_big(v);

  SampleReport rep;
  rep.radii = radii;
  rep.target = {u.to_complex(), v.to_complex()};
  const double scale = std::max(1.0, magnitude(tu, tv));
  const Complex cc = to_big(c);
  for (double r : radii) {
    const Real t = pow(Real(r), Real(1) / Real(phi.mult()));
    const Complex x = ipow(Complex(t), phi.mult());
    const Complex y = eval_series(phi, t, cc);
    const Complex pv = eval_poly(f.P, x, y), qv = eval_poly(f.Q, x, y);
    const double err = magnitude(pv - tu, qv - tv) / scale;
    const bool bad = !std::isfinite(err);
    rep.overflow.push_back(bad);
    rep.errors.push_back(bad ? std::numeric_limits<double>::infinity() : err);
  }
  const size_t n = rep.errors.size();
  const size_t from = n >= 3 ? n - 3 : 0;
  bool monotone = true;
  for (size_t k = from + 1; k < n; ++k) {
    if (!(rep.errors[k] <= rep.errors[k - 1])) monotone = false;
  }
  rep.converged = monotone && rep.errors.back() <= tol;
  return rep;
}

std::uint64_t oracle_seed() {
  if (const char* s = std::getenv("NPV_SEED"); s && *s) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 20240611;
}

ProbeReport properness_probe(const MapPair& f, int n_samples, double radius,
                             const std::vector<ParamSeries>& along, std::uint64_t seed) {
  if (n_samples <= 0) throw std::invalid_argument("properness_probe: n_samples must be positive");
  if (!(radius > 1)) throw std::invalid_argument("properness_probe: radius must exceed 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> box(-2.0, 2.0);

  ProbeReport rep;
  rep.samples = n_samples;
  rep.bound = std::sqrt(radius);
  const Real r1(radius);
  const Real r2 = r1 * r1;
  for (int k = 0; k < n_samples; ++k) {
    Complex p1, q1, p2, q2;
    if (along.empty() || k % 2 == 0) {
      // random direction on the unit sphere of C^2
      const double g[4] = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
      const double nrm = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]);
      const Complex dx(g[0] / nrm, g[1] / nrm), dy(g[2] / nrm, g[3] / nrm);
      p1 = eval_poly(f.P, dx * r1, dy * r1);
      q1 = eval_poly(f.Q, dx * r1, dy * r1);
      p2 = eval_poly(f.P, dx * r2, dy * r2);
      q2 = eval_poly(f.Q, dx * r2, dy * r2);
      ++rep.random_samples;
    } else {
      const ParamSeries& phi = along[static_cast<size_t>(k / 2) % along.size()];
      const Complex c(box(rng), box(rng));
      const Real t1 = pow(r1, Real(1) / Real(phi.mult()));
      const Real t2 = pow(r2, Real(1) / Real(phi.mult()));
      const Complex x1 = ipow(Complex(t1), phi.mult()), x2 = ipow(Complex(t2), phi.mult());
      const Complex y1 = eval_series(phi, t1, c), y2 = eval_series(phi, t2, c);
      p1 = eval_poly(f.P, x1, y1);
      q1 = eval_poly(f.Q, x1, y1);
      p2 = eval_poly(f.P, x2, y2);
      q2 = eval_poly(f.Q, x2, y2);
      ++rep.series_samples;
    }
    const double m1 = magnitude(p1, q1), m2 = magnitude(p2, q2);
    // Bounded: small at both radii and not growing between them.
    if (m1 <= rep.bound && m2 <= rep.bound && m2 <= 2 * m1 + 1) {
      ++rep.bounded;
      rep.limits.emplace_back(to_double(p2), to_double(q2));
    }
  }
  return rep;
}

}  // namespace npv
