#include "npv/unipoly.hpp"

#include <stdexcept>

namespace npv {

UniPoly::UniPoly(Scalar constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(Scalar coeff, int degree) {
  if (coeff.is_zero()) return {};
  std::vector<Scalar> c(static_cast<size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::linear_factor(const Scalar& root) { return UniPoly({-root, Scalar(1)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool UniPoly::is_monomial() const {
  if (is_zero()) return false;
  for (int k = 0; k < degree(); ++k) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

Scalar UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Scalar(0);
  return coeffs_[k];
}

Scalar UniPoly::leading_coeff() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

Scalar UniPoly::eval(const Scalar& s) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= s;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (degree() <= 0) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result(Scalar(1));
  UniPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * leading_coeff().inverse();
}

UniPoly UniPoly::taylor_shift(const Scalar& shift) const {
  // Horner with (s + shift).
  UniPoly acc;
  const UniPoly step({shift, Scalar(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= step;
    acc += UniPoly(*it);
  }
  return acc;
}

int UniPoly::root_multiplicity(const Scalar& root) const {
  if (is_zero()) return 0;
  UniPoly shifted = taylor_shift(root);
  int k = 0;
  while (shifted.coeffs_[k].is_zero()) ++k;
  return k;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    const bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) cs = "(" + cs + ")";
    bool negative = !compound && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (!out.empty()) {
      out += negative ? " - " : " + ";
    } else if (negative) {
      out += "-";
    }
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

std::vector<std::string> UniPoly::coeff_strings() const {
  if (is_zero()) return {"0"};
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_string());
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Scalar> quot(static_cast<size_t>(a.degree() - db) + 1);
  const Scalar inv_lc = b.leading_coeff().inverse();
  for (int k = a.degree(); k >= db; --k) {
    Scalar factor = rem[k] * inv_lc;
    if (factor.is_zero()) continue;
    quot[k - db] = factor;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coeffs()[j];
  }
  rem.resize(static_cast<size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UniPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

}  // namespace npv
