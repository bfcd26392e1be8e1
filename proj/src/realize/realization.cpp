#include "pizza/realize/realization.hpp"

#include "pizza/error.hpp"
#include "pizza/germ/trace.hpp"

namespace pizza {

namespace {

using Kind = ExprNode::Kind;
using exact::make_rational;

Expr power(const Expr& e, const Rational& p) {
  if (p == 1) return e;
  if (p == 0) return make_const(Rational(1));
  return make_pow(e, p);
}

Expr times(const Expr& a, const Expr& b) {
  if (a->kind == Kind::Const && a->value == 1) return b;
  if (b->kind == Kind::Const && b->value == 1) return a;
  return make_mul(a, b);
}

Expr with_sign(int sign, const Expr& e) { return sign < 0 ? make_neg(e) : e; }

// u of each frame in plane coordinates.
Expr frame_u(Frame f) {
  switch (f) {
    case Frame::S1: return make_x();
    case Frame::S2: return make_y();
    case Frame::S3: return make_neg(make_x());
    case Frame::S4: return make_neg(make_y());
  }
  return make_x();
}

Expr substitute_y(const Expr& e, const Expr& y) {
  switch (e->kind) {
    case Kind::Const:
    case Kind::X: return e;
    case Kind::Y: return y;
    case Kind::Add: return make_add(substitute_y(e->lhs, y), substitute_y(e->rhs, y));
    case Kind::Sub: return make_sub(substitute_y(e->lhs, y), substitute_y(e->rhs, y));
    case Kind::Mul: return make_mul(substitute_y(e->lhs, y), substitute_y(e->rhs, y));
    case Kind::Div: return make_div(substitute_y(e->lhs, y), substitute_y(e->rhs, y));
    case Kind::Neg: return make_neg(substitute_y(e->lhs, y));
    case Kind::Pow: return make_pow(substitute_y(e->lhs, y), e->value);
    case Kind::Unit: return make_unit(substitute_y(e->lhs, y));
  }
  return e;
}

struct Draft {
  Arc from, to;
  Frame frame;
  Expr raw;
  PieceProvenance prov;
};

}  // namespace

Expr s1_arc_expr(const PuiseuxPoly& eta) {
  Expr out;
  for (const auto& t : eta.terms()) {
    Rational c = t.coeff.rational_value();
    Expr m = power(make_x(), t.exp);
    Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1) m = make_mul(make_const(mag), m);
    if (!out)
      out = c < 0 ? make_neg(m) : m;
    else
      out = c < 0 ? make_sub(out, m) : make_add(out, m);
  }
  return out ? out : make_const(Rational(0));
}

SliceFormula realize_slice(const Slice& s, const Arc& lower, const Arc& upper) {
  if (lower.frame != Frame::S1 || upper.frame != Frame::S1)
    throw Error(ErrorCode::InvalidSlice, "slice geometry must be given in the +x frame");
  SliceFormula out;
  const Exponent& a = s.Q.a;
  const Exponent& b = s.Q.b;
  if (s.sign == 0 || (a.is_infinite() && b.is_infinite())) {
    if (s.sign != 0)
      throw Error(ErrorCode::InvalidSlice, "a slice of order inf along every arc vanishes, so its sign must be 0");
    if (!(a.is_infinite() && b.is_infinite())) throw Error(ErrorCode::InvalidSlice, "zero sign needs Q = [inf, inf]");
    out.kind = "zero";
    out.expr = make_const(Rational(0));
    return out;
  }
  if (s.Q.is_point()) {
    out.kind = "constant";
    out.r = a.value();
    out.expr = with_sign(s.sign, power(make_x(), a.value()));
    return out;
  }
  if (!s.mu.is_linear() || s.mu.m == 0) throw Error(ErrorCode::InvalidSlice, "non-point segment needs a non-constant width");
  Exponent mu_a = s.mu.eval(a), mu_b = s.mu.eval(b);
  if (std::min(mu_a, mu_b) != s.beta) throw Error(ErrorCode::InvalidSlice, "beta is not the least width");
  out.deep_at_lower = mu_a > mu_b;
  const Exponent& q_deep = out.deep_at_lower ? a : b;
  const Rational q_sh = (out.deep_at_lower ? b : a).value();
  const Rational beta = s.beta.value();
  out.beta_tilde = out.deep_at_lower ? mu_a : mu_b;
  Expr L = s1_arc_expr(lower.eta), U = s1_arc_expr(upper.eta);
  Expr v = out.deep_at_lower ? make_sub(make_y(), L) : make_sub(U, make_y());
  if (q_deep.is_infinite()) {
    out.kind = "infinite";
    out.lambda = 1 / s.mu.m;
    out.r = q_sh - out.lambda * beta;
    out.expr = with_sign(s.sign, times(power(v, out.lambda), power(make_x(), out.r)));
    return out;
  }
  out.kind = "finite";
  const Rational bt = out.beta_tilde.value();
  out.lambda = (q_deep.value() - q_sh) / (bt - beta);
  out.r = q_sh - out.lambda * beta;
  Expr base = make_add(v, power(make_x(), bt));
  out.expr = with_sign(s.sign, times(power(base, out.lambda), power(make_x(), out.r)));
  return out;
}

Expr gluing_unit(const Expr& ratio_lower, const Expr& ratio_upper, const Arc& lower, const Arc& upper) {
  Expr L = s1_arc_expr(lower.eta), U = s1_arc_expr(upper.eta);
  Expr s = make_div(make_sub(make_y(), L), make_sub(U, L));
  Expr one = make_const(Rational(1));
  return make_unit(make_add(times(make_sub(one, s), ratio_lower), times(s, ratio_upper)));
}

Expr trace_ratio(const Expr& target, const Expr& current, const Arc& arc) {
  Trace t = trace_along(target, arc), c = trace_along(current, arc);
  if (t.order() != c.order())
    throw Error(ErrorCode::OrderMismatch, "orders " + t.order().str() + " and " + c.order().str() + " on " + to_string(arc));
  if (t.is_zero()) throw Error(ErrorCode::OrderMismatch, "both sides vanish on " + to_string(arc));
  Expr y = s1_arc_expr(arc.eta);
  return make_div(substitute_y(target, y), substitute_y(current, y));
}

RealizedGerm realize(const AbstractPizza& h) {
  require_valid(h);
  const std::size_t k = h.size();
  std::size_t wrap = k;
  for (std::size_t i = 0; i < k && wrap == k; ++i)
    if (h.slices[i].beta == Exponent(1)) wrap = i;
  if (wrap == k) throw Error(ErrorCode::InvalidPizza, "no slice with beta = 1");
  // Rotate so the wrap slice is last.
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < k; ++j) order.push_back((wrap + 1 + j) % k);
  auto S = [&](std::size_t j) -> const Slice& { return h.slices[order[j]]; };

  int clusters = 0;
  for (std::size_t j = 0; j + 1 < k; ++j)
    if (S(j).beta == Exponent(1)) ++clusters;
  auto direction = [&](int c) -> Rational { return make_rational(-1, 2) + make_rational(c + 1, clusters + 2); };
  std::vector<PuiseuxPoly> A{PuiseuxPoly::monomial(AlgebraicReal(direction(0)), Rational(1))};
  int cluster = 0;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    if (S(j).beta == Exponent(1))
      A.push_back(PuiseuxPoly::monomial(AlgebraicReal(direction(++cluster)), Rational(1)));
    else
      A.push_back(A.back() + PuiseuxPoly::monomial(AlgebraicReal(1), S(j).beta.value()));
  }
  auto s1 = [](const PuiseuxPoly& eta) { return Arc{Frame::S1, eta}; };

  std::vector<Draft> drafts;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    SliceFormula f = realize_slice(S(j), s1(A[j]), s1(A[j + 1]));
    drafts.push_back({s1(A[j]), s1(A[j + 1]), Frame::S1, f.expr, {order[j], Frame::S1, f, false}});
  }

  // The wrap slice runs from A[k-1] around the origin back to A[0].
  const Slice& W = S(k - 1);
  const Arc seam_a = s1(end_seam(Frame::S1)), seam_b = s1(start_seam(Frame::S1));
  const Arc from_w = s1(A[k - 1]), to_w = s1(A[0]);
  SliceFormula constant;
  Rational q_sh;
  bool deep_a = false, deep_b = false;
  SliceFormula deep;
  if (W.sign == 0) {
    constant.kind = "zero";
  } else if (W.Q.is_point()) {
    constant.kind = "constant";
    q_sh = W.Q.a.value();
  } else {
    if (W.mu.eval(W.Q.a) > W.mu.eval(W.Q.b)) {
      deep_a = true;
      deep = realize_slice(W, from_w, seam_a);
      q_sh = W.Q.b.value();
    } else {
      deep_b = true;
      deep = realize_slice(W, seam_b, to_w);
      q_sh = W.Q.a.value();
    }
    constant.kind = "constant";
  }
  auto constant_piece = [&](Frame f) {
    SliceFormula c = constant;
    if (c.kind == "zero") {
      c.expr = make_const(Rational(0));
    } else {
      c.r = q_sh;
      c.expr = with_sign(W.sign, power(frame_u(f), q_sh));
    }
    return c;
  };
  auto add_wrap = [&](const Arc& from, const Arc& to, Frame f, const SliceFormula& formula) {
    drafts.push_back({from, to, f, formula.expr, {order[k - 1], f, formula, false}});
  };
  add_wrap(from_w, Arc{Frame::S2, start_seam(Frame::S2)}, Frame::S1, deep_a ? deep : constant_piece(Frame::S1));
  add_wrap(Arc{Frame::S2, start_seam(Frame::S2)}, Arc{Frame::S3, start_seam(Frame::S3)}, Frame::S2,
           constant_piece(Frame::S2));
  add_wrap(Arc{Frame::S3, start_seam(Frame::S3)}, Arc{Frame::S4, start_seam(Frame::S4)}, Frame::S3,
           constant_piece(Frame::S3));
  add_wrap(Arc{Frame::S4, start_seam(Frame::S4)}, seam_b, Frame::S4, constant_piece(Frame::S4));
  add_wrap(seam_b, to_w, Frame::S1, deep_b ? deep : constant_piece(Frame::S1));

  // Glue: each piece of S1 is corrected on its starting arc to match the previous piece, and on
  // its ending arc to match the next piece when that one lies in another frame.
  RealizedGerm out;
  const std::size_t n = drafts.size();
  const Expr one = make_const(Rational(1));
  bool prev_matched_next = false;
  for (std::size_t j = 0; j < n; ++j) {
    Draft& d = drafts[j];
    const Draft& prev = drafts[(j + n - 1) % n];
    const Draft& next = drafts[(j + 1) % n];
    bool match_lower = prev_matched_next || trace_along(prev.raw, d.from) == trace_along(d.raw, d.from);
    bool match_upper = next.frame == Frame::S1 || trace_along(next.raw, d.to) == trace_along(d.raw, d.to);
    prev_matched_next = !match_upper;
    Expr expr = d.raw;
    if (!match_lower || !match_upper) {
      if (d.frame != Frame::S1) throw Error(ErrorCode::InvalidPizza, "gluing needed outside the +x frame");
      Arc from = d.from.frame == Frame::S1 ? d.from : s1(start_seam(Frame::S1));
      Arc to = d.to.frame == Frame::S1 ? d.to : s1(end_seam(Frame::S1));
      Expr lo = match_lower ? one : trace_ratio(prev.raw, d.raw, from);
      Expr hi = match_upper ? one : trace_ratio(next.raw, d.raw, to);
      expr = make_mul(d.raw, gluing_unit(lo, hi, from, to));
      d.prov.glued = true;
    }
    out.germ.pieces.push_back({d.from, d.to, expr});
    out.provenance.push_back(d.prov);
  }
  validate_germ(out.germ);
  return out;
}

}  // namespace pizza
