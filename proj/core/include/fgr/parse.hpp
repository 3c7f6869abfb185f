#pragma once

// Text form of exact coefficients and basis combinations.
//
//   expr    ::= ["+"|"-"] term (("+"|"-") term)*
//   term    ::= unary (("*"|"/") unary)*
//   unary   ::= "-" unary | power
//   power   ::= primary ["^" integer]       (scalars only)
//   primary ::= integer | "sqrt2" | "log2" | family index | "(" expr ")"
//
// A basis integral is a family letter p,q,r,s,a,b,c,d,e,f followed by a
// positive index ("p3"). Products may contain at most one basis integral and
// divisors must be nonzero and free of log2, so "-3/sqrt2*(2*log2+1)*p5" and
// "12*sqrt2*(a5-2*a7)" are both accepted. Everything BasisCombo::to_string and
// FieldElem::to_string produce parses back to the same value.

#include <stdexcept>
#include <string>
#include <string_view>

#include "fgr/basis.hpp"
#include "fgr/exactfield.hpp"

namespace fgr {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

BasisCombo parse_basis_expr(std::string_view text);
FieldElem parse_scalar_expr(std::string_view text);

}  // namespace fgr
