#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "npv/bipoly.hpp"
#include "npv/mappair.hpp"
#include "npv/puiseux.hpp"

namespace npv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t position);
  // 0-based offset into the parsed text.
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Variables x and y, operators + - * / ^, parentheses, integer and i
// literals ("5i" is 5*i). Division only by nonzero constants.
BiPoly parse_poly(std::string_view text);
// Same grammar over x and the parameter s: fixed terms c*x^e with rational e
// plus exactly one parameter term s*x^e below all of them.
ParamSeries parse_series(std::string_view text);
Scalar parse_scalar(std::string_view text);
Rational parse_rational(std::string_view text);
// "P; Q", unnormalized.
std::pair<BiPoly, BiPoly> parse_map(std::string_view text);

}  // namespace npv
