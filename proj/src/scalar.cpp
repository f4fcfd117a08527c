#include "npv/scalar.hpp"

#include <stdexcept>

namespace npv {

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Rational n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Scalar result(1);
  while (e != 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero scalar");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Scalar::to_string() const {
  if (is_real()) return rational_to_string(re_);
  std::string out;
  if (sgn(re_) != 0) out = rational_to_string(re_);
  Rational a = abs(im_);
  const bool negative = sgn(im_) < 0;
  if (negative) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  if (a.get_num() != 1) out += a.get_num().get_str();
  out += "i";
  if (a.get_den() != 1) out += "/" + a.get_den().get_str();
  return out;
}

std::complex<double> Scalar::to_complex() const { return {re_.get_d(), im_.get_d()}; }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  Integer n = sqrt(q.get_num());
  Integer d = sqrt(q.get_den());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::optional<Scalar> exact_sqrt(const Scalar& w) {
  if (w.is_real()) {
    if (sgn(w.re()) >= 0) {
      if (auto r = exact_sqrt(w.re())) return Scalar(*r);
      return std::nullopt;
    }
    if (auto r = exact_sqrt(Rational(-w.re()))) return Scalar(0, *r);
    return std::nullopt;
  }
  // (u + vi)^2 = a + bi  <=>  u^2 = (a + |w|)/2, v = b / (2u).
  auto modulus = exact_sqrt(w.norm());
  if (!modulus) return std::nullopt;
  auto u = exact_sqrt(Rational((w.re() + *modulus) / 2));
  if (!u || sgn(*u) == 0) return std::nullopt;
  Rational v = w.im() / (2 * *u);
  return Scalar(*u, v);
}

}  // namespace npv
