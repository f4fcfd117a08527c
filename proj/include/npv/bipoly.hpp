#pragma once

#include <map>
#include <string>
#include <utility>

#include "npv/scalar.hpp"
#include "npv/unipoly.hpp"

namespace npv {

// Exponent pair (deg_x, deg_y).
struct Monomial {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse bivariate polynomial over Q(i). No zero coefficient is stored.
class BiPoly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  BiPoly() = default;
  BiPoly(Scalar constant);  // NOLINT(google-explicit-constructor)
  explicit BiPoly(Terms terms);

  static BiPoly x();
  static BiPoly y();
  static BiPoly term(Scalar coeff, int deg_x, int deg_y);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar coeff(int deg_x, int deg_y) const;

  // -1 for the zero polynomial.
  int degree() const;
  int degree_y() const;
  // Coefficient of y^k as a polynomial in x (the variable of the result).
  UniPoly coeff_in_y(int k) const;
  // Homogeneous part of total degree d, dehomogenized as F_d(1, s).
  UniPoly top_form_at_x_one() const;

  BiPoly dx() const;
  BiPoly dy() const;
  BiPoly pow(unsigned exponent) const;
  Scalar eval(const Scalar& x, const Scalar& y) const;
  // F(x + t*y, y)
  BiPoly shear(long t) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Scalar& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator*(BiPoly a, const Scalar& c) { return a *= c; }
  friend BiPoly operator*(const Scalar& c, BiPoly a) { return a *= c; }
  BiPoly operator-() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  // Canonical text form, e.g. "y^2 + x*y - 1/2". Parses back with parse_poly.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Scalar& c);
  Terms terms_;
};

// J(P,Q) = P_x Q_y - P_y Q_x
BiPoly jacobian(const BiPoly& p, const BiPoly& q);

}  // namespace npv
