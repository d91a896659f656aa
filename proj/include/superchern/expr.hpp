#pragma once

// Expression language for polynomial coefficients and forms.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' (INTEGER | DX))*
//   primary := INTEGER ['/' INTEGER] | 'x'k | 'dx'k | '(' expr ')'
//
// `^` binds tighter than unary minus; `dx1^dx2` is a wedge product and `*`
// multiplies (wedges) forms. Whitespace is ignored.

#include <cstddef>
#include <memory>
#include <string_view>

#include "superchern/form.hpp"
#include "superchern/poly.hpp"

namespace superchern {

struct ExprNode {
  enum class Kind { literal, variable, dx, add, sub, mul, neg, pow, wedge };

  Kind kind = Kind::literal;
  std::size_t column = 0;  // 1-based position in the source
  Rational value;          // literal
  std::size_t index = 0;   // variable / dx, 1-based as written
  unsigned exponent = 0;   // pow
  std::unique_ptr<ExprNode> lhs;
  std::unique_ptr<ExprNode> rhs;
};

struct ExprAst {
  std::unique_ptr<ExprNode> root;
};

/// Parses without range-checking variables; throws ParseError with a 1-based column.
ExprAst parse_expression(std::string_view src);

/// Lowers to a polynomial in n_vars variables; rejects dx symbols and unknown variables.
Poly lower_to_poly(const ExprAst& ast, std::size_t n_vars);

/// Lowers to a form; `*` and `^` between forms are wedge products.
Form lower_to_form(const ExprAst& ast, std::size_t n_vars);

inline Poly parse_poly(std::string_view src, std::size_t n_vars) {
  return lower_to_poly(parse_expression(src), n_vars);
}

inline Form parse_form(std::string_view src, std::size_t n_vars) {
  return lower_to_form(parse_expression(src), n_vars);
}

}  // namespace superchern
