#include "npv/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace npv {

BiPoly::BiPoly(Scalar constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{0, 0}, std::move(constant));
}

BiPoly::BiPoly(Terms terms) {
  for (auto& [m, c] : terms) {
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }
}

BiPoly BiPoly::x() { return term(Scalar(1), 1, 0); }
BiPoly BiPoly::y() { return term(Scalar(1), 0, 1); }

BiPoly BiPoly::term(Scalar coeff, int deg_x, int deg_y) {
  BiPoly out;
  out.add_term(Monomial{deg_x, deg_y}, coeff);
  return out;
}

void BiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Scalar BiPoly::coeff(int deg_x, int deg_y) const {
  auto it = terms_.find(Monomial{deg_x, deg_y});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int BiPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x + m.y);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.y);
  return d;
}

UniPoly BiPoly::coeff_in_y(int k) const {
  UniPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.y == k) out += UniPoly::monomial(c, m.x);
  }
  return out;
}

UniPoly BiPoly::top_form_at_x_one() const {
  const int d = degree();
  UniPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.x + m.y == d) out += UniPoly::monomial(c, m.y);
  }
  return out;
}

BiPoly BiPoly::dx() const {
  BiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.x > 0) out.add_term(Monomial{m.x - 1, m.y}, c * Scalar(m.x));
  }
  return out;
}

BiPoly BiPoly::dy() const {
  BiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.y > 0) out.add_term(Monomial{m.x, m.y - 1}, c * Scalar(m.y));
  }
  return out;
}

BiPoly BiPoly::pow(unsigned exponent) const {
  BiPoly result(Scalar(1));
  BiPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

Scalar BiPoly::eval(const Scalar& xv, const Scalar& yv) const {
  Scalar acc;
  for (const auto& [m, c] : terms_) acc += c * xv.pow(m.x) * yv.pow(m.y);
  return acc;
}

BiPoly BiPoly::shear(long t) const {
  if (t == 0) return *this;
  const BiPoly sheared_x = x() + BiPoly::term(Scalar(t), 0, 1);
  std::vector<BiPoly> powers{BiPoly(Scalar(1))};
  BiPoly out;
  for (const auto& [m, c] : terms_) {
    while (static_cast<int>(powers.size()) <= m.x) powers.push_back(powers.back() * sheared_x);
    out += powers[m.x] * BiPoly::term(c, 0, m.y);
  }
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  BiPoly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) out.add_term(Monomial{ma.x + mb.x, ma.y + mb.y}, ca * cb);
  }
  terms_ = std::move(out.terms_);
  return *this;
}

BiPoly& BiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Graded order: highest total degree first, then highest y-degree.
  std::vector<std::pair<Monomial, Scalar>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first.x + a.first.y, db = b.first.x + b.first.y;
    if (da != db) return da > db;
    return a.first.y > b.first.y;
  });
  std::string out;
  for (const auto& [m, c] : ordered) {
    std::string cs = c.to_string();
    const bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) cs = "(" + cs + ")";
    const bool negative = !compound && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (!out.empty()) {
      out += negative ? " - " : " + ";
    } else if (negative) {
      out += "-";
    }
    std::string mono;
    auto append = [&mono](const char* var, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append("x", m.x);
    append("y", m.y);
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

BiPoly jacobian(const BiPoly& p, const BiPoly& q) { return p.dx() * q.dy() - p.dy() * q.dx(); }

}  // namespace npv
