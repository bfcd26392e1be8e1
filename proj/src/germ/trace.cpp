#include "pizza/germ/trace.hpp"

#include <cmath>

#include "pizza/error.hpp"

namespace pizza {

namespace {

using Kind = ExprNode::Kind;

AlgebraicReal rational_power(const AlgebraicReal& c, const Rational& p) {
  if (p.get_den() == 1) return c.pow(p.get_num().get_si());
  if (c.sign() <= 0)
    throw Error(ErrorCode::PositivityUnverifiable, "non-integer power of a non-positive trace coefficient");
  return c.pow(p.get_num().get_si()).root(p.get_den().get_ui());
}

const PuiseuxPoly& one() {
  static const PuiseuxPoly p(AlgebraicReal(1));
  return p;
}

// Integer-power part expanded: coeff·u^exp·num/den · Π fractional.
struct Split {
  PuiseuxPoly num{AlgebraicReal(1)}, den{AlgebraicReal(1)};
  bool fractional = false;
};

Split split(const std::vector<std::pair<PuiseuxPoly, Rational>>& bases) {
  Split s;
  for (const auto& [b, p] : bases) {
    if (p.get_den() != 1) {
      s.fractional = true;
      continue;
    }
    if (p > 0)
      s.num = s.num * b.pow(static_cast<unsigned>(p.get_num().get_ui()));
    else
      s.den = s.den * b.pow(static_cast<unsigned>(Rational(-p).get_num().get_ui()));
  }
  return s;
}

}  // namespace

Trace::Trace(const PuiseuxPoly& p) {
  if (p.is_zero()) return;
  coeff_ = p.leading().coeff;
  exp_ = p.leading().exp;
  absorb(p.scaled(coeff_.inverse()).shifted(-exp_), Rational(1));
}

bool Trace::is_pure() const {
  Split s = split(bases_);
  return !s.fractional && s.den == one();
}

PuiseuxPoly Trace::pure() const {
  if (is_zero()) return PuiseuxPoly();
  Split s = split(bases_);
  if (s.fractional || !(s.den == one())) throw Error(ErrorCode::InvalidArgument, "trace is not a Puiseux polynomial");
  return s.num.scaled(coeff_).shifted(exp_);
}

Exponent Trace::order() const { return is_zero() ? Exponent::infinity() : Exponent(exp_); }

void Trace::absorb(const PuiseuxPoly& monic, const Rational& power) {
  if (power == 0 || monic == one()) return;
  for (auto it = bases_.begin(); it != bases_.end(); ++it)
    if (it->first == monic) {
      it->second += power;
      if (it->second == 0) bases_.erase(it);
      return;
    }
  bases_.emplace_back(monic, power);
}

Trace operator*(const Trace& a, const Trace& b) {
  if (a.is_zero() || b.is_zero()) return Trace();
  Trace out = a;
  out.coeff_ = a.coeff_ * b.coeff_;
  out.exp_ = a.exp_ + b.exp_;
  for (const auto& [base, p] : b.bases_) out.absorb(base, p);
  return out;
}

Trace operator+(const Trace& a, const Trace& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // a + b = b·(1 + a/b) with a/b = c·u^e·num/den.
  Trace ratio = a * b.inverse();
  Split s = split(ratio.bases_);
  if (s.fractional) throw Error(ErrorCode::UnsupportedExpression, "sum of traces with different radical structure");
  PuiseuxPoly sum = s.num.scaled(ratio.coeff_).shifted(ratio.exp_) + s.den;
  if (sum.is_zero()) return Trace();
  return b * Trace(sum) * Trace(s.den).inverse();
}

Trace Trace::operator-() const {
  Trace out = *this;
  out.coeff_ = -coeff_;
  return out;
}

Trace Trace::inverse() const { return pow(Rational(-1)); }

Trace Trace::pow(const Rational& p) const {
  if (is_zero()) {
    if (p > 0) return *this;
    throw Error(ErrorCode::DenominatorVanishes, "non-positive power of a vanishing trace");
  }
  Trace out;
  out.coeff_ = rational_power(coeff_, p);
  out.exp_ = exp_ * p;
  for (const auto& [base, q] : bases_) out.absorb(base, q * p);
  return out;
}

bool operator==(const Trace& a, const Trace& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  Trace ratio = a * b.inverse();
  if (ratio.exp_ != 0 || ratio.coeff_ != AlgebraicReal(1)) return false;
  Split s = split(ratio.bases_);
  return !s.fractional && s.num == s.den;
}

double Trace::eval(double t) const {
  if (is_zero()) return 0.0;
  double v = coeff_.to_double() * std::pow(t, exp_.get_d());
  for (const auto& [b, p] : bases_) v *= std::pow(b.eval(t), p.get_d());
  return v;
}

std::string Trace::str() const {
  if (is_zero()) return "0";
  std::string s = coeff_.str() + "*u^(" + exact::to_string(exp_) + ")";
  for (const auto& [b, p] : bases_) s += "*(" + b.str() + ")^(" + exact::to_string(p) + ")";
  return s;
}

Trace trace_along(const Expr& e, const Arc& arc) {
  switch (e->kind) {
    case Kind::Const: return Trace(PuiseuxPoly(AlgebraicReal(e->value)));
    case Kind::X:
    case Kind::Y: {
      bool is_x = e->kind == Kind::X;
      PuiseuxPoly u = PuiseuxPoly::monomial(AlgebraicReal(1), Rational(1));
      switch (arc.frame) {
        case Frame::S1: return Trace(is_x ? u : arc.eta);
        case Frame::S2: return Trace(is_x ? arc.eta : u);
        case Frame::S3: return Trace(is_x ? -u : arc.eta);
        case Frame::S4: return Trace(is_x ? arc.eta : -u);
      }
      return Trace();
    }
    case Kind::Add: return trace_along(e->lhs, arc) + trace_along(e->rhs, arc);
    case Kind::Sub: return trace_along(e->lhs, arc) + (-trace_along(e->rhs, arc));
    case Kind::Mul: return trace_along(e->lhs, arc) * trace_along(e->rhs, arc);
    case Kind::Div: {
      Trace d = trace_along(e->rhs, arc);
      if (d.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "denominator vanishes on " + to_string(arc));
      return trace_along(e->lhs, arc) * d.inverse();
    }
    case Kind::Neg: return -trace_along(e->lhs, arc);
    case Kind::Pow: return trace_along(e->lhs, arc).pow(e->value);
    case Kind::Unit: return trace_along(e->lhs, arc);
  }
  return Trace();
}

}  // namespace pizza
