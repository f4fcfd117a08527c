#include "npv/parse.hpp"

#include <cctype>
#include <map>

namespace npv {

namespace {

// Exponent vector of a generalized monomial x^ex * y^ey * s^es.
struct Key {
  Rational ex;
  int ey = 0;
  int es = 0;
  friend bool operator<(const Key& a, const Key& b) {
    if (a.ex != b.ex) return a.ex < b.ex;
    if (a.ey != b.ey) return a.ey < b.ey;
    return a.es < b.es;
  }
};

using Expr = std::map<Key, Scalar>;

void add_term(Expr& e, const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

Expr constant(const Scalar& c) {
  Expr e;
  add_term(e, Key{}, c);
  return e;
}

Expr add(const Expr& a, const Expr& b, bool negate) {
  Expr out = a;
  for (const auto& [k, c] : b) add_term(out, k, negate ? -c : c);
  return out;
}

Expr multiply(const Expr& a, const Expr& b) {
  Expr out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      add_term(out, Key{Rational(ka.ex + kb.ex), ka.ey + kb.ey, ka.es + kb.es}, ca * cb);
    }
  }
  return out;
}

std::optional<Scalar> as_constant(const Expr& e) {
  if (e.empty()) return Scalar(0);
  if (e.size() == 1 && sgn(e.begin()->first.ex) == 0 && e.begin()->first.ey == 0 &&
      e.begin()->first.es == 0) {
    return e.begin()->second;
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = expression();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, size_t at) const {
    throw ParseError(what + " at position " + std::to_string(at), at);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expression() {
    Expr acc = signed_term();
    for (;;) {
      if (accept('+')) {
        acc = add(acc, signed_term(), false);
      } else if (accept('-')) {
        acc = add(acc, signed_term(), true);
      } else {
        return acc;
      }
    }
  }

  Expr signed_term() {
    if (accept('-')) return add(Expr{}, signed_term(), true);
    if (accept('+')) return signed_term();
    return term();
  }

  Expr term() {
    Expr acc = power();
    for (;;) {
      if (accept('*')) {
        acc = multiply(acc, signed_power());
      } else if (accept('/')) {
        const size_t divisor_at = pos_;
        auto d = as_constant(signed_power());
        if (!d) fail_at("division by a non-constant", divisor_at);
        if (d->is_zero()) fail_at("division by zero", divisor_at);
        acc = multiply(acc, constant(d->inverse()));
      } else {
        return acc;
      }
    }
  }

  Expr signed_power() {
    if (accept('-')) return add(Expr{}, signed_power(), true);
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!accept('^')) return base;
    skip_space();
    const size_t at = pos_;
    Expr ex;
    if (accept('-')) {
      ex = add(Expr{}, primary(), true);
    } else {
      ex = primary();
    }
    auto e = as_constant(ex);
    if (!e || !e->is_real()) fail_at("exponent must be a rational constant", at);
    return raise(base, e->re(), at);
  }

  Expr raise(const Expr& base, const Rational& e, size_t at) const {
    if (base.size() == 1 && base.begin()->second.is_one()) {
      const Key& k = base.begin()->first;
      Rational ey = k.ey * e, es = k.es * e;
      if (ey.get_den() != 1 || es.get_den() != 1 || sgn(ey) < 0 || sgn(es) < 0) {
        fail_at("y and s take only non-negative integer powers", at);
      }
      Expr out;
      add_term(out, Key{Rational(k.ex * e), static_cast<int>(ey.get_num().get_si()), static_cast<int>(es.get_num().get_si())},
               Scalar(1));
      return out;
    }
    if (auto c = as_constant(base); c && e.get_den() == 1) {
      if (c->is_zero() && sgn(e) < 0) fail_at("zero to a negative power", at);
      return constant(c->pow(e.get_num().get_si()));
    }
    if (e.get_den() != 1 || sgn(e) < 0) fail_at("only non-negative integer powers of a sum", at);
    if (e > 64) fail_at("exponent too large", at);
    Expr out = constant(Scalar(1));
    for (long k = 0; k < e.get_num().get_si(); ++k) out = multiply(out, base);
    return out;
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Expr e = expression();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational value(Integer(std::string(text_.substr(start, pos_ - start))));
      if (pos_ < text_.size() && text_[pos_] == 'i' && !ident_continues(pos_ + 1)) {
        ++pos_;
        return constant(Scalar(0, value));
      }
      return constant(Scalar(value));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const size_t start = pos_;
      while (ident_continues(pos_)) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      Expr e;
      if (name == "x") {
        add_term(e, Key{Rational(1), 0, 0}, Scalar(1));
      } else if (name == "y") {
        add_term(e, Key{Rational(0), 1, 0}, Scalar(1));
      } else if (name == "s") {
        add_term(e, Key{Rational(0), 0, 1}, Scalar(1));
      } else if (name == "i") {
        e = constant(Scalar::imaginary_unit());
      } else {
        fail_at("unknown identifier '" + std::string(name) + "'", start);
      }
      return e;
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  bool ident_continues(size_t at) const {
    return at < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[at])) || text_[at] == '_');
  }

  std::string_view text_;
  size_t pos_ = 0;
};

Expr parse_expr(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace

ParseError::ParseError(const std::string& message, size_t position)
    : std::runtime_error(message), position_(position) {}

BiPoly parse_poly(std::string_view text) {
  BiPoly::Terms terms;
  for (const auto& [k, c] : parse_expr(text)) {
    if (k.es != 0) throw ParseError("the parameter s is not allowed in a polynomial", 0);
    if (k.ex.get_den() != 1 || sgn(k.ex) < 0) {
      throw ParseError("x takes only non-negative integer powers in a polynomial", 0);
    }
    terms.emplace(Monomial{static_cast<int>(k.ex.get_num().get_si()), k.ey}, c);
  }
  return BiPoly(std::move(terms));
}

ParamSeries parse_series(std::string_view text) {
  TermMap fixed;
  std::optional<Rational> param;
  for (const auto& [k, c] : parse_expr(text)) {
    if (k.ey != 0) throw ParseError("y is not allowed in a series", 0);
    if (k.es > 1) throw ParseError("the parameter s must appear linearly", 0);
    if (k.es == 1) {
      if (param) throw ParseError("more than one parameter term", 0);
      if (!c.is_one()) throw ParseError("the parameter term must have coefficient 1", 0);
      param = k.ex;
    } else {
      fixed.emplace(k.ex, c);
    }
  }
  if (!param) throw ParseError("series has no parameter term s*x^e", 0);
  try {
    return ParamSeries(fixed, *param);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

Scalar parse_scalar(std::string_view text) {
  auto c = as_constant(parse_expr(text));
  if (!c) throw ParseError("expected a constant", 0);
  return *c;
}

Rational parse_rational(std::string_view text) {
  Scalar c = parse_scalar(text);
  if (!c.is_real()) throw ParseError("expected a rational number", 0);
  return c.re();
}

std::pair<BiPoly, BiPoly> parse_map(std::string_view text) {
  const size_t semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected 'P; Q'", text.size());
  if (text.find(';', semi + 1) != std::string_view::npos) {
    throw ParseError("more than one ';'", text.find(';', semi + 1));
  }
  BiPoly p, q;
  p = parse_poly(text.substr(0, semi));
  try {
    q = parse_poly(text.substr(semi + 1));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), e.position() + semi + 1);
  }
  return {std::move(p), std::move(q)};
}

}  // namespace npv
