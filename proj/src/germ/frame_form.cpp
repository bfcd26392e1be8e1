#include "pizza/germ/frame_form.hpp"

#include "pizza/error.hpp"

namespace pizza {

namespace {

using Kind = ExprNode::Kind;
using exact::Monomial2;

AlgebraicReal rational_power(const AlgebraicReal& c, const Rational& p) {
  if (p.get_den() == 1) return c.pow(p.get_num().get_si());
  if (c.sign() <= 0)
    throw Error(ErrorCode::PositivityUnverifiable, "non-integer power " + exact::to_string(p) + " of a non-positive constant");
  AlgebraicReal base = c.pow(p.get_num().get_si());
  return base.root(p.get_den().get_ui());
}

bool single_term(const GenPoly2& g) { return g.terms().size() == 1; }

void add_factor(FrameForm& form, const GenPoly2& base, const Rational& power) {
  if (power == 0) return;
  for (auto& f : form.factors)
    if (f.base.terms().size() == base.terms().size()) {
      bool same = true;
      auto it = base.terms().begin();
      for (const auto& [m, c] : f.base.terms()) {
        if (m != it->first || c != it->second) {
          same = false;
          break;
        }
        ++it;
      }
      if (same) {
        f.power += power;
        std::erase_if(form.factors, [](const FrameFactor& x) { return x.power == 0; });
        return;
      }
    }
  form.factors.push_back({base, power});
}

FrameForm multiply(FrameForm a, const FrameForm& b) {
  if (a.zero || b.zero) {
    FrameForm z;
    z.zero = true;
    return z;
  }
  a.scalar = a.scalar * b.scalar;
  a.r0 += b.r0;
  a.units += b.units;
  for (const auto& f : b.factors) add_factor(a, f.base, f.power);
  return a;
}

FrameForm power(FrameForm a, const Rational& p) {
  if (a.zero) {
    if (p <= 0) throw Error(ErrorCode::DenominatorVanishes, "non-positive power of zero");
    return a;
  }
  a.scalar = rational_power(a.scalar, p);
  a.r0 *= p;
  for (auto& f : a.factors) f.power *= p;
  return a;
}

FrameForm from_sum(const GenPoly2& s) {
  FrameForm out;
  if (s.is_zero()) {
    out.zero = true;
    return out;
  }
  if (single_term(s)) {
    const auto& [m, c] = *s.terms().begin();
    out.scalar = c;
    out.r0 = m.first;
    if (m.second == 0) return out;
    // c·v^k = |c|·(−v)^k for odd k and c < 0, which keeps fractional powers of −v defined.
    if (c.sign() < 0 && m.second % 2 == 1) {
      out.scalar = -c;
      out.factors.push_back({-GenPoly2::z(), Rational(m.second)});
    } else {
      out.factors.push_back({GenPoly2::z(), Rational(m.second)});
    }
    return out;
  }
  out.factors.push_back({s, Rational(1)});
  return out;
}

FrameForm product_form(const Expr& e, Frame f) {
  switch (e->kind) {
    case Kind::Mul: return multiply(product_form(e->lhs, f), product_form(e->rhs, f));
    case Kind::Div: {
      FrameForm d = product_form(e->rhs, f);
      if (d.zero) throw Error(ErrorCode::DenominatorVanishes, "division by zero expression");
      return multiply(product_form(e->lhs, f), power(d, Rational(-1)));
    }
    case Kind::Neg: {
      FrameForm a = product_form(e->lhs, f);
      a.scalar = -a.scalar;
      return a;
    }
    case Kind::Pow: return power(product_form(e->lhs, f), e->value);
    case Kind::Unit: {
      FrameForm u;
      u.units = 1;
      return u;
    }
    default: return from_sum(to_frame_poly(e, f));
  }
}

GenPoly2 coordinate(bool is_x, Frame f) {
  // x and y in terms of (u, v)
  switch (f) {
    case Frame::S1: return is_x ? GenPoly2::u_power(Rational(1)) : GenPoly2::z();
    case Frame::S2: return is_x ? GenPoly2::z() : GenPoly2::u_power(Rational(1));
    case Frame::S3: return is_x ? GenPoly2::u_power(Rational(1), AlgebraicReal(-1)) : GenPoly2::z();
    case Frame::S4: return is_x ? GenPoly2::z() : GenPoly2::u_power(Rational(1), AlgebraicReal(-1));
  }
  return GenPoly2();
}

}  // namespace

GenPoly2 to_frame_poly(const Expr& e, Frame f) {
  switch (e->kind) {
    case Kind::Const: return GenPoly2::constant(AlgebraicReal(e->value));
    case Kind::X: return coordinate(true, f);
    case Kind::Y: return coordinate(false, f);
    case Kind::Add: return to_frame_poly(e->lhs, f) + to_frame_poly(e->rhs, f);
    case Kind::Sub: return to_frame_poly(e->lhs, f) - to_frame_poly(e->rhs, f);
    case Kind::Mul: return to_frame_poly(e->lhs, f) * to_frame_poly(e->rhs, f);
    case Kind::Neg: return -to_frame_poly(e->lhs, f);
    case Kind::Div: {
      GenPoly2 d = to_frame_poly(e->rhs, f);
      if (d.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "division by zero");
      if (!single_term(d) || d.terms().begin()->first != Monomial2{Rational(0), 0})
        throw Error(ErrorCode::UnsupportedExpression, "division by a non-constant inside a sum: " + print_expression(e));
      return to_frame_poly(e->lhs, f) * GenPoly2::constant(d.terms().begin()->second.inverse());
    }
    case Kind::Pow: {
      GenPoly2 b = to_frame_poly(e->lhs, f);
      const Rational& p = e->value;
      if (p.get_den() == 1 && p >= 0) return b.pow(static_cast<unsigned>(p.get_num().get_ui()));
      if (b.is_zero()) {
        if (p > 0) return b;
        throw Error(ErrorCode::DenominatorVanishes, "non-positive power of zero");
      }
      if (single_term(b) && b.terms().begin()->first.second == 0) {
        const auto& [m, c] = *b.terms().begin();
        return GenPoly2::u_power(m.first * p, rational_power(c, p));
      }
      throw Error(ErrorCode::UnsupportedExpression,
                  "non-polynomial power inside a sum: " + print_expression(e));
    }
    case Kind::Unit:
      throw Error(ErrorCode::UnsupportedExpression, "unit(...) inside a sum: " + print_expression(e));
  }
  return GenPoly2();
}

FrameForm to_frame_form(const Expr& e, Frame f) { return product_form(e, f); }

Exponent ord_of_form(const FrameForm& form, const PuiseuxPoly& eta) {
  if (form.zero) return Exponent::infinity();
  Rational total = form.r0;
  bool vanishes = false;
  for (const auto& fac : form.factors) {
    PuiseuxPoly t = fac.base.substitute(eta);
    if (t.is_zero()) {
      if (fac.power < 0) throw Error(ErrorCode::DenominatorVanishes, "denominator vanishes along " + eta.str());
      vanishes = true;
      continue;
    }
    total += fac.power * t.leading().exp;
  }
  if (vanishes) return Exponent::infinity();
  return Exponent(total);
}

}  // namespace pizza
