#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

namespace npv {

using Rational = mpq_class;
using Integer = mpz_class;

// Gaussian rational re + im*i with exact GMP components.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im = 0);

  static Scalar imaginary_unit() { return Scalar(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Canonical total order: by real part, then imaginary part.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  // "3/2", "-1+2i", "-i/2", "1/3+5i/7". Parses back through parse_scalar.
  std::string to_string() const;
  std::complex<double> to_complex() const;

 private:
  Rational re_;
  Rational im_;
};

// num/den in lowest terms. mpq_class(num, den) skips this and GMP
// arithmetic and comparison assume canonical operands.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& q);

std::optional<Rational> exact_sqrt(const Rational& q);
// Some z in Q(i) with z*z == w, if one exists.
std::optional<Scalar> exact_sqrt(const Scalar& w);

}  // namespace npv
