#include "pizza/germ/germ_spec.hpp"

#include <algorithm>
#include <numeric>

#include "pizza/error.hpp"
#include "pizza/germ/trace.hpp"

namespace pizza {

namespace {

using Kind = ExprNode::Kind;

// Plane direction (x, y) of a straight arc.
std::pair<Rational, Rational> ray_direction(const Arc& a) {
  const auto& t = a.eta.terms();
  if (t.size() > 1 || (t.size() == 1 && (t[0].exp != 1 || !t[0].coeff.is_rational())))
    throw Error(ErrorCode::UnsupportedExpression, "only straight boundary arcs map linearly: " + to_string(a));
  Rational k = t.empty() ? Rational(0) : t[0].coeff.rational_value();
  switch (a.frame) {
    case Frame::S1: return {Rational(1), k};
    case Frame::S2: return {k, Rational(1)};
    case Frame::S3: return {Rational(-1), k};
    case Frame::S4: return {k, Rational(-1)};
  }
  return {Rational(1), k};
}

Arc ray_arc(const Rational& x, const Rational& y) {
  auto line = [](Frame f, const Rational& k) {
    return Arc{f, k == 0 ? PuiseuxPoly() : PuiseuxPoly::monomial(AlgebraicReal(k), Rational(1))};
  };
  Arc a;
  if (x > 0 && abs(y) <= x)
    a = line(Frame::S1, y / x);
  else if (y > 0 && abs(x) <= y)
    a = line(Frame::S2, x / y);
  else if (x < 0 && abs(y) <= -x)
    a = line(Frame::S3, y / -x);
  else
    a = line(Frame::S4, x / -y);
  return canonical_arc(a);
}

Expr linear_form(const Rational& p, const Rational& q) {
  Expr px = p == 0 ? nullptr : make_mul(make_const(p), make_x());
  Expr qy = q == 0 ? nullptr : make_mul(make_const(q), make_y());
  if (!px) return qy;
  return qy ? make_add(px, qy) : px;
}

Expr substitute(const Expr& e, const Expr& x, const Expr& y) {
  switch (e->kind) {
    case Kind::Const: return e;
    case Kind::X: return x;
    case Kind::Y: return y;
    case Kind::Add: return make_add(substitute(e->lhs, x, y), substitute(e->rhs, x, y));
    case Kind::Sub: return make_sub(substitute(e->lhs, x, y), substitute(e->rhs, x, y));
    case Kind::Mul: return make_mul(substitute(e->lhs, x, y), substitute(e->rhs, x, y));
    case Kind::Div: return make_div(substitute(e->lhs, x, y), substitute(e->rhs, x, y));
    case Kind::Neg: return make_neg(substitute(e->lhs, x, y));
    case Kind::Pow: return make_pow(substitute(e->lhs, x, y), e->value);
    case Kind::Unit: return make_unit(substitute(e->lhs, x, y));
  }
  return e;
}

}  // namespace

GermSpec compose_linear(const GermSpec& g, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Rational det = a * d - b * c;
  if (det == 0) throw Error(ErrorCode::InvalidArgument, "singular linear map");
  Expr x = linear_form(a, b), y = linear_form(c, d);
  // Preimage of a boundary ray: L^{-1}(w) = (d·w_x - b·w_y, a·w_y - c·w_x) / det.
  auto pull = [&](const Arc& arc) {
    auto [wx, wy] = ray_direction(arc);
    return ray_arc(Rational((d * wx - b * wy) / det), Rational((a * wy - c * wx) / det));
  };
  GermSpec out;
  for (const auto& p : g.pieces) {
    GermPiece q{pull(p.from), pull(p.to), substitute(p.expr, x, y)};
    // An orientation-reversing map turns each sector clockwise.
    if (det < 0) std::swap(q.from, q.to);
    out.pieces.push_back(q);
  }
  if (det < 0) std::reverse(out.pieces.begin(), out.pieces.end());
  return out;
}

GermSpec polynomial_germ(const Expr& e) {
  Arc axis{Frame::S1, PuiseuxPoly()};
  return GermSpec{{GermPiece{axis, axis, e}}};
}

void validate_germ(const GermSpec& g) {
  const std::size_t n = g.pieces.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "germ has no pieces");
  for (const auto& p : g.pieces) {
    if (!p.expr) throw Error(ErrorCode::InvalidArgument, "piece without expression");
    validate_arc(p.from);
    validate_arc(p.to);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!(g.pieces[i].to == g.pieces[(i + 1) % n].from))
      throw Error(ErrorCode::InvalidArgument, "piece " + std::to_string(i) + " does not end where the next starts");
  if (n > 1) {
    int wraps = 0;
    for (std::size_t i = 0; i < n; ++i) {
      int c = ccw_compare(g.pieces[i].from, g.pieces[(i + 1) % n].from);
      if (c == 0) throw Error(ErrorCode::InvalidArgument, "piece " + std::to_string(i) + " is empty");
      if (c > 0) ++wraps;
    }
    if (wraps != 1) throw Error(ErrorCode::InvalidArgument, "pieces do not make exactly one counterclockwise turn");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = g.pieces[i];
    const auto& b = g.pieces[(i + 1) % n];
    if (n == 1) break;
    Trace ta = trace_along(a.expr, a.to);
    Trace tb = trace_along(b.expr, a.to);
    if (!(ta == tb))
      throw Error(ErrorCode::NotContinuousGerm, "pieces " + std::to_string(i) + " and " +
                                                    std::to_string((i + 1) % n) + " differ on " + to_string(a.to) +
                                                    ": " + ta.str() + " vs " + tb.str());
  }
}

std::vector<FrameLayout> frame_layouts(const GermSpec& g) {
  const std::size_t n = g.pieces.size();
  std::vector<FrameLayout> out;
  std::vector<Arc> starts;
  for (const auto& p : g.pieces) starts.push_back(canonical_arc(p.from));
  for (int fi = 0; fi < 4; ++fi) {
    FrameLayout l;
    l.frame = frame_from_index(fi);
    if (n == 1) {
      l.intervals.push_back({0, 0, 1});
      out.push_back(l);
      continue;
    }
    Arc frame_start{l.frame, start_seam(l.frame)};
    // Piece active at the frame start: last boundary at or before it, cyclically.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return ccw_compare(starts[a], starts[b]) < 0; });
    std::size_t active = order.back();
    for (std::size_t k : order)
      if (ccw_compare(starts[k], frame_start) <= 0) active = k;
    std::vector<std::size_t> inside;
    for (std::size_t k : order)
      if (starts[k].frame == l.frame && ccw_compare(starts[k], frame_start) > 0) inside.push_back(k);
    int lo = 0;
    for (std::size_t j = 0; j < inside.size(); ++j) {
      l.boundaries.push_back(starts[inside[j]]);
      int id = 2 + static_cast<int>(j);
      l.intervals.push_back({active, lo, id});
      active = inside[j];
      lo = id;
    }
    l.intervals.push_back({active, lo, 1});
    out.push_back(l);
  }
  return out;
}

Arc layout_arc(const FrameLayout& l, int id) {
  if (id == 0) return Arc{l.frame, start_seam(l.frame)};
  if (id == 1) return Arc{l.frame, end_seam(l.frame)};
  return l.boundaries.at(static_cast<std::size_t>(id - 2));
}

}  // namespace pizza
