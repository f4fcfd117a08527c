#pragma once

#include <string>
#include <utility>
#include <vector>

#include "npv/scalar.hpp"

namespace npv {

// Dense univariate polynomial in the parameter variable (written s in text,
// xi in the math). coeffs()[k] is the coefficient of s^k; the leading
// coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(Scalar constant);  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Scalar> coeffs);

  static UniPoly monomial(Scalar coeff, int degree);
  // s - root
  static UniPoly linear_factor(const Scalar& root);

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return degree() <= 0; }
  // A nonzero c*s^k; such a polynomial has no nonzero root.
  bool is_monomial() const;
  Scalar coeff(int k) const;
  Scalar leading_coeff() const;

  Scalar eval(const Scalar& s) const;
  UniPoly derivative() const;
  UniPoly pow(unsigned exponent) const;
  UniPoly monic() const;
  // s -> s + shift
  UniPoly taylor_shift(const Scalar& shift) const;
  // Multiplicity of root as a zero (0 if not a root).
  int root_multiplicity(const Scalar& root) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Scalar& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Scalar& c) { return a *= c; }
  friend UniPoly operator*(const Scalar& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "s") const;
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

// Quotient and remainder over Q(i); throws on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0, 0) == 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);

}  // namespace npv
