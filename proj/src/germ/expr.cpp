#include "pizza/germ/expr.hpp"

#include <cctype>
#include <cmath>

#include "pizza/error.hpp"

namespace pizza {

namespace {

using Kind = ExprNode::Kind;
using exact::Integer;

Expr node(Kind k, Rational v = Rational(0), Expr l = nullptr, Expr r = nullptr) {
  return std::make_shared<const ExprNode>(ExprNode{k, std::move(v), std::move(l), std::move(r)});
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Rational exponent() {
    skip();
    if (eat('(')) {
      bool neg = eat('-');
      Integer num = integer();
      Integer den(1);
      if (eat('/')) den = integer();
      if (den == 0) fail("zero denominator");
      expect(')');
      Rational r(neg ? Integer(-num) : num, den);
      r.canonicalize();
      return r;
    }
    return Rational(integer());
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (eat('+')) e = make_add(e, term());
      else if (eat('-')) e = make_sub(e, term());
      else return e;
    }
  }

  Expr term() {
    bool neg = eat('-');
    Expr e = factor();
    for (;;) {
      if (eat('*')) {
        e = make_mul(e, factor());
      } else if (eat('/')) {
        Expr d = factor();
        // integer/integer is a rational literal
        if (e->kind == Kind::Const && d->kind == Kind::Const && d->value != 0) e = make_const(Rational(e->value / d->value));
        else e = make_div(e, d);
      } else {
        break;
      }
    }
    if (!neg) return e;
    if (e->kind == Kind::Const) return make_const(Rational(-e->value));
    return make_neg(e);
  }

  Expr factor() {
    Expr b = base();
    if (eat('^')) return make_pow(b, exponent());
    return b;
  }

  Expr base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      return make_x();
    }
    if (c == 'y') {
      ++pos_;
      return make_y();
    }
    if (s_.substr(pos_, 4) == "unit") {
      pos_ += 4;
      expect('(');
      Expr inner = expr();
      expect(')');
      return make_unit(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return make_const(Rational(integer()));
    if (eat('(')) {
      Expr inner = expr();
      expect(')');
      return inner;
    }
    fail("unexpected character");
  }
};

int precedence(const Expr& e) {
  switch (e->kind) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Neg: return 2;
    case Kind::Mul:
    case Kind::Div: return 3;
    case Kind::Pow: return 4;
    case Kind::Const:
      if (e->value < 0) return 2;
      return e->value.get_den() == 1 ? 5 : 3;
    default: return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = print_expression(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

Expr make_const(const Rational& c) { return node(Kind::Const, c); }
Expr make_x() { return node(Kind::X); }
Expr make_y() { return node(Kind::Y); }
Expr make_add(Expr a, Expr b) { return node(Kind::Add, Rational(0), std::move(a), std::move(b)); }
Expr make_sub(Expr a, Expr b) { return node(Kind::Sub, Rational(0), std::move(a), std::move(b)); }
Expr make_mul(Expr a, Expr b) { return node(Kind::Mul, Rational(0), std::move(a), std::move(b)); }
Expr make_div(Expr a, Expr b) { return node(Kind::Div, Rational(0), std::move(a), std::move(b)); }
Expr make_neg(Expr a) { return node(Kind::Neg, Rational(0), std::move(a)); }
Expr make_pow(Expr a, const Rational& p) { return node(Kind::Pow, p, std::move(a)); }
Expr make_unit(Expr a) { return node(Kind::Unit, Rational(0), std::move(a)); }

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string print_expression(const Expr& e) {
  switch (e->kind) {
    case Kind::Const:
      if (e->value < 0) return "-" + exact::to_string(Rational(-e->value));
      return exact::to_string(e->value);
    case Kind::X: return "x";
    case Kind::Y: return "y";
    case Kind::Add: return wrap(e->lhs, 1) + " + " + wrap(e->rhs, 2);
    case Kind::Sub: return wrap(e->lhs, 1) + " - " + wrap(e->rhs, 2);
    case Kind::Mul: return wrap(e->lhs, 3) + "*" + wrap(e->rhs, 4);
    case Kind::Div: return wrap(e->lhs, 3) + "/" + wrap(e->rhs, 4);
    case Kind::Neg: return "-" + wrap(e->lhs, 3);
    case Kind::Pow: {
      std::string p = e->value.get_den() == 1 && e->value >= 0 ? exact::to_string(e->value)
                                                               : "(" + exact::to_string(e->value) + ")";
      return wrap(e->lhs, 5) + "^" + p;
    }
    case Kind::Unit: return "unit(" + print_expression(e->lhs) + ")";
  }
  return "";
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind || a->value != b->value) return false;
  return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

double eval_expression(const Expr& e, double x, double y) {
  switch (e->kind) {
    case Kind::Const: return e->value.get_d();
    case Kind::X: return x;
    case Kind::Y: return y;
    case Kind::Add: return eval_expression(e->lhs, x, y) + eval_expression(e->rhs, x, y);
    case Kind::Sub: return eval_expression(e->lhs, x, y) - eval_expression(e->rhs, x, y);
    case Kind::Mul: return eval_expression(e->lhs, x, y) * eval_expression(e->rhs, x, y);
    case Kind::Div: return eval_expression(e->lhs, x, y) / eval_expression(e->rhs, x, y);
    case Kind::Neg: return -eval_expression(e->lhs, x, y);
    case Kind::Pow: {
      double b = eval_expression(e->lhs, x, y);
      if (e->value.get_den() == 1) return std::pow(b, e->value.get_d());
      if (b < 0) return std::nan("");
      return std::pow(b, e->value.get_d());
    }
    case Kind::Unit: return eval_expression(e->lhs, x, y);
  }
  return std::nan("");
}

bool is_zero_constant(const Expr& e) { return e->kind == Kind::Const && e->value == 0; }

}  // namespace pizza
