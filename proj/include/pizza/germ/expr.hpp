#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "pizza/exact/rational.hpp"

namespace pizza {

using exact::Rational;

// Immutable expression tree over x, y with rational constants, + − × ÷, rational powers and
// unit(e) markers (an ord-0 positive factor, emitted by realization).
struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Const, X, Y, Add, Sub, Mul, Div, Neg, Pow, Unit };
  Kind kind;
  Rational value;  // Const value, or the Pow exponent
  Expr lhs, rhs;   // operands (rhs unused for Neg, Pow, Unit)
};

Expr make_const(const Rational& c);
Expr make_x();
Expr make_y();
Expr make_add(Expr a, Expr b);
Expr make_sub(Expr a, Expr b);
Expr make_mul(Expr a, Expr b);
Expr make_div(Expr a, Expr b);
Expr make_neg(Expr a);
Expr make_pow(Expr a, const Rational& p);
Expr make_unit(Expr a);

// expr := term (('+'|'-') term)*; term := ['-'] factor (('*'|'/') factor)*;
// factor := base ('^' exponent)?; exponent := integer | '(' ['-'] integer ['/' integer] ')';
// base := 'x' | 'y' | rational | '(' expr ')' | 'unit' '(' expr ')'.
// Throws ParseError with the byte offset.
Expr parse_expression(std::string_view text);

// Parseable text; parse_expression(print_expression(e)) is structurally equal to e.
std::string print_expression(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

// Floating-point value at (x, y); rational powers of negative bases give NaN.
double eval_expression(const Expr& e, double x, double y);

bool is_zero_constant(const Expr& e);

}  // namespace pizza
