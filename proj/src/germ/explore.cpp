#include "pizza/germ/explore.hpp"

#include <algorithm>
#include <set>

#include "pizza/error.hpp"

namespace pizza {

namespace {

using exact::APoly;
using exact::Monomial2;

AlgebraicReal eval_apoly(const APoly& p, const AlgebraicReal& s) {
  AlgebraicReal v(0), pw(1);
  for (const auto& c : p) {
    if (!c.is_zero()) v = v + c * pw;
    pw = pw * s;
  }
  return v;
}

// Rational strictly between algebraic a < b.
Rational rational_between(AlgebraicReal a, AlgebraicReal b) {
  while (!(a.hi() < b.lo())) {
    a = a.bisected();
    b = b.bisected();
  }
  return exact::simplest_between(a.hi(), b.lo());
}

PuiseuxPoly term(const AlgebraicReal& c, const Rational& e) { return PuiseuxPoly::monomial(c, e); }

struct Point {
  AlgebraicReal c;
  int forced = -1;
  int factor = -1;       // single contributing factor, or -1
  int contributions = 0; // root contributions (factors × multiplicity)
  bool simple() const { return forced < 0 && contributions == 1; }
};

void add_point(std::vector<Point>& pts, const AlgebraicReal& c, int forced, int factor, int mult) {
  for (auto& p : pts)
    if (compare(p.c, c) == 0) {
      if (forced >= 0) p.forced = forced;
      if (factor >= 0) {
        p.contributions += mult;
        p.factor = factor;
      }
      return;
    }
  Point p{c, forced, factor, factor >= 0 ? mult : 0};
  pts.push_back(p);
}

struct Node {
  PuiseuxPoly eta;
  Rational alpha_lo;
  bool below = true, above = true;
  std::vector<GenPoly2> F;
  int depth = 0;
  ZoneBoundary outer_below, outer_above;
  int forced = -1;
};

class Explorer {
 public:
  Explorer(const FrameForm& form, Frame f, const std::vector<ForcedArc>& forced, const ExploreOptions& opt)
      : form_(form), frame_(f), forced_(forced), opt_(opt) {}

  std::vector<Zone> run();

 private:
  struct Law {
    Rational lambda, r;
  };

  Law law_at(const std::vector<GenPoly2>& F, const Rational& a) const {
    Law l{Rational(0), form_.r0};
    for (std::size_t k = 0; k < F.size(); ++k) {
      Monomial2 g = F[k].governing(a);
      l.lambda += form_.factors[k].power * Rational(g.second);
      l.r += form_.factors[k].power * g.first;
    }
    return l;
  }

  // Sign of f along z = s·u^a; flags a negative base under a fractional power.
  int sign_along(const std::vector<GenPoly2>& F, const Rational& a, const AlgebraicReal& s, bool& unverified) const {
    int sg = form_.scalar.sign();
    for (std::size_t k = 0; k < F.size(); ++k) {
      int fs = eval_apoly(F[k].initial(a).poly, s).sign();
      const Rational& p = form_.factors[k].power;
      if (fs < 0 && p.get_den() != 1) unverified = true;
      if (fs < 0 && mpz_even_p(p.get_num().get_mpz_t()) == 0) sg = -sg;
    }
    return sg;
  }

  bool denominator_vanishes_on_center(const std::vector<GenPoly2>& F) const {
    for (std::size_t k = 0; k < F.size(); ++k)
      if (form_.factors[k].power < 0 && F[k].min_z() > 0) return true;
    return false;
  }

  int forced_id_of(const PuiseuxPoly& eta) const {
    for (const auto& fa : forced_)
      if (fa.eta == eta) return fa.id;
    return -1;
  }

  ZoneBoundary center_boundary(const Node& n) const {
    return ZoneBoundary{n.eta, nullptr, n.forced, Exponent::infinity()};
  }

  Zone make_zone(const Node& n, int side, const ZoneBoundary& lower, const ZoneBoundary& upper,
                 const Rational& beta, const Rational& a_star) const {
    Zone z;
    z.frame = frame_;
    z.center = n.eta;
    z.side = side;
    z.lower = lower;
    z.upper = upper;
    z.beta = beta;
    Law l = law_at(n.F, a_star);
    z.lambda = l.lambda;
    z.r = l.r;
    z.sign = sign_along(n.F, a_star, AlgebraicReal(side), z.positivity_unverified);
    z.sample = n.eta + term(AlgebraicReal(side), a_star);
    return z;
  }

  std::vector<Zone> explore(const Node& n);
  std::vector<Zone> point_zones(const Node& n, const Rational& alpha, const Point& p, const Rational& sep_lo,
                                const Rational& sep_hi, bool below, bool above);

  const FrameForm& form_;
  Frame frame_;
  std::vector<ForcedArc> forced_;
  ExploreOptions opt_;
};

std::vector<Zone> Explorer::point_zones(const Node& n, const Rational& alpha, const Point& p,
                                        const Rational& sep_lo, const Rational& sep_hi, bool below, bool above) {
  PuiseuxPoly lo_arc = n.eta + term(AlgebraicReal(sep_lo), alpha);
  PuiseuxPoly hi_arc = n.eta + term(AlgebraicReal(sep_hi), alpha);
  ZoneBoundary lo{lo_arc, nullptr, -1, Exponent(alpha)};
  ZoneBoundary hi{hi_arc, nullptr, -1, Exponent(alpha)};
  PuiseuxPoly trunc = n.eta + term(p.c, alpha);
  if (p.simple()) {
    auto br = std::make_shared<Branch>();
    br->truncation = trunc;
    br->alpha = alpha;
    const auto k = static_cast<std::size_t>(p.factor);
    br->shifted = n.F[k].shift_z(p.c, alpha);
    Rational r = form_.r0;
    for (std::size_t j = 0; j < n.F.size(); ++j) {
      Rational m = n.F[j].initial(alpha).value;
      r += form_.factors[j].power * (j == k ? m - alpha : m);
    }
    const Rational& pk = form_.factors[k].power;
    ZoneBoundary theta{trunc, br, -1, Exponent::infinity()};
    std::vector<Zone> out;
    for (int side : {-1, 1}) {
      if ((side < 0 && !below) || (side > 0 && !above)) continue;
      Zone z;
      z.frame = frame_;
      z.center = trunc;
      z.center_branch = br;
      z.side = side;
      z.lower = side < 0 ? lo : theta;
      z.upper = side < 0 ? theta : hi;
      z.beta = alpha;
      z.lambda = pk;
      z.r = r;
      Rational s = side < 0 ? rational_between(AlgebraicReal(sep_lo), p.c) : rational_between(p.c, AlgebraicReal(sep_hi));
      z.sign = sign_along(n.F, alpha, AlgebraicReal(s), z.positivity_unverified);
      z.sample = n.eta + term(AlgebraicReal(s), alpha);
      z.denominator_vanishes = pk < 0;
      out.push_back(z);
    }
    return out;
  }
  Node child;
  child.eta = trunc;
  child.alpha_lo = alpha;
  child.below = below;
  child.above = above;
  child.depth = n.depth + 1;
  for (const auto& f : n.F) child.F.push_back(f.shift_z(p.c, alpha));
  child.outer_below = lo;
  child.outer_above = hi;
  child.forced = forced_id_of(trunc);
  return explore(child);
}

std::vector<Zone> Explorer::explore(const Node& n) {
  if (n.depth > opt_.max_depth)
    throw Error(ErrorCode::DepthLimitExceeded, "exploration deeper than " + std::to_string(opt_.max_depth) +
                                                   " around " + n.eta.str());
  // Critical levels.
  std::set<Rational> level_set;
  for (const auto& f : n.F)
    for (const auto& e : exact::newton_polygon(f).edges)
      if (e.slope > n.alpha_lo) level_set.insert(e.slope);
  for (const auto& fa : forced_) {
    PuiseuxPoly d = fa.eta - n.eta;
    if (d.is_zero()) continue;
    int s = d.leading().coeff.sign();
    if (d.leading().exp > n.alpha_lo && ((s < 0 && n.below) || (s > 0 && n.above))) level_set.insert(d.leading().exp);
  }
  std::vector<Rational> levels(level_set.begin(), level_set.end());

  // Points per level, split by side and sorted by |c| increasing.
  std::vector<std::vector<Point>> below_pts(levels.size()), above_pts(levels.size());
  for (std::size_t li = 0; li < levels.size(); ++li) {
    std::vector<Point> pts;
    for (std::size_t k = 0; k < n.F.size(); ++k) {
      auto init = n.F[k].initial(levels[li]);
      for (const auto& rr : exact::isolate_real_roots(init.poly))
        if (!rr.value.is_zero()) add_point(pts, rr.value, -1, static_cast<int>(k), rr.multiplicity);
    }
    for (const auto& fa : forced_) {
      PuiseuxPoly d = fa.eta - n.eta;
      if (d.is_zero() || d.leading().exp != levels[li]) continue;
      add_point(pts, d.leading().coeff, fa.id, -1, 0);
    }
    for (auto& p : pts) {
      if (p.c.sign() < 0 && n.below) below_pts[li].push_back(p);
      if (p.c.sign() > 0 && n.above) above_pts[li].push_back(p);
    }
    auto by_abs = [](const Point& a, const Point& b) {
      return compare(a.c.sign() < 0 ? -a.c : a.c, b.c.sign() < 0 ? -b.c : b.c) < 0;
    };
    std::sort(below_pts[li].begin(), below_pts[li].end(), by_abs);
    std::sort(above_pts[li].begin(), above_pts[li].end(), by_abs);
  }

  std::vector<Zone> out;
  for (int side : {-1, 1}) {
    if ((side < 0 && !n.below) || (side > 0 && !n.above)) continue;
    // Outer to inner.
    std::vector<std::vector<Zone>> parts;
    ZoneBoundary outer = side < 0 ? n.outer_below : n.outer_above;
    Rational prev = n.alpha_lo;
    for (std::size_t li = 0; li < levels.size(); ++li) {
      const Rational& a = levels[li];
      const auto& pts = side < 0 ? below_pts[li] : above_pts[li];
      // Separators by |c|: sep[0] inside the first point, sep[i] between points i-1 and i.
      std::vector<Rational> sep(pts.size() + 1);
      sep[0] = pts.empty() ? Rational(1) : rational_between(AlgebraicReal(0), side < 0 ? -pts[0].c : pts[0].c);
      for (std::size_t i = 1; i < pts.size(); ++i) {
        AlgebraicReal x = side < 0 ? -pts[i - 1].c : pts[i - 1].c;
        AlgebraicReal y = side < 0 ? -pts[i].c : pts[i].c;
        sep[i] = rational_between(x, y);
      }
      if (!pts.empty()) {
        AlgebraicReal last = side < 0 ? -pts.back().c : pts.back().c;
        sep[pts.size()] = Rational(exact::floor(last.hi())) + 1;
      }
      for (auto& s : sep) s *= side;
      Rational outermost = sep[pts.size()];
      ZoneBoundary deep{n.eta + term(AlgebraicReal(outermost), a), nullptr, -1, Exponent(a)};
      Rational mid = (prev + a) / 2;
      Zone shell = side < 0 ? make_zone(n, side, outer, deep, prev, mid) : make_zone(n, side, deep, outer, prev, mid);
      parts.push_back({shell});
      for (std::size_t i = pts.size(); i-- > 0;) {
        Rational lo = side < 0 ? sep[i + 1] : sep[i];
        Rational hi = side < 0 ? sep[i] : sep[i + 1];
        parts.push_back(point_zones(n, a, pts[i], lo, hi, true, true));
      }
      outer = ZoneBoundary{n.eta + term(AlgebraicReal(sep[0]), a), nullptr, -1, Exponent(a)};
      prev = a;
    }
    Zone deep_zone = side < 0 ? make_zone(n, side, outer, center_boundary(n), prev, prev + 1)
                              : make_zone(n, side, center_boundary(n), outer, prev, prev + 1);
    deep_zone.denominator_vanishes = denominator_vanishes_on_center(n.F);
    parts.push_back({deep_zone});
    if (side > 0) std::reverse(parts.begin(), parts.end());
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

std::vector<Zone> Explorer::run() {
  std::vector<GenPoly2> F;
  for (const auto& fac : form_.factors) F.push_back(fac.base);
  Node root;
  root.eta = PuiseuxPoly();
  root.alpha_lo = 1;
  root.F = F;
  const Rational one(1);
  std::vector<Point> pts;
  for (std::size_t k = 0; k < F.size(); ++k)
    for (const auto& rr : exact::isolate_real_roots(F[k].initial(one).poly))
      if (compare(rr.value, AlgebraicReal(-1)) >= 0 && compare(rr.value, AlgebraicReal(1)) <= 0)
        add_point(pts, rr.value, -1, static_cast<int>(k), rr.multiplicity);
  for (const auto& fa : forced_) {
    AlgebraicReal c(0);
    if (!fa.eta.is_zero() && fa.eta.leading().exp == 1) c = fa.eta.leading().coeff;
    add_point(pts, c, fa.eta == term(c, one) || (c.is_zero() && fa.eta.is_zero()) ? fa.id : -1, -1, 0);
  }
  add_point(pts, AlgebraicReal(-1), -1, -1, 0);
  add_point(pts, AlgebraicReal(1), -1, -1, 0);
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return compare(a.c, b.c) < 0; });
  // A forced arc sharing only its leading coefficient still needs recursion at that point.
  for (auto& p : pts)
    for (const auto& fa : forced_) {
      AlgebraicReal c(0);
      if (!fa.eta.is_zero() && fa.eta.leading().exp == 1) c = fa.eta.leading().coeff;
      if (compare(c, p.c) == 0 && p.forced < 0) p.forced = fa.id;
    }
  std::vector<Rational> sep;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) sep.push_back(rational_between(pts[i].c, pts[i + 1].c));
  std::vector<Zone> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool first = i == 0, last = i + 1 == pts.size();
    Rational lo = first ? Rational(-2) : sep[i - 1];
    Rational hi = last ? Rational(2) : sep[i];
    auto zs = point_zones(root, one, pts[i], lo, hi, !first, !last);
    out.insert(out.end(), zs.begin(), zs.end());
  }
  return out;
}

}  // namespace

Exponent Zone::ord_at(const Exponent& contact) const {
  if (contact.is_infinite()) {
    if (lambda > 0) return Exponent::infinity();
    if (lambda == 0) return Exponent(r);
    throw Error(ErrorCode::DenominatorVanishes, "order tends to -infinity along " + center.str());
  }
  return Exponent(lambda * contact.value() + r);
}

PuiseuxPoly Branch::expansion(const Rational& max_exp) const {
  PuiseuxPoly theta = truncation;
  GenPoly2 g = shifted;
  for (int step = 0; step < 256; ++step) {
    if (g.min_z() > 0) return theta;  // exact finite branch
    // Least u exponent among z^0 and z^1 terms.
    bool have0 = false, have1 = false;
    Rational i0, i1;
    AlgebraicReal a0, a1;
    for (const auto& [m, c] : g.terms()) {
      if (m.second == 0 && (!have0 || m.first < i0)) {
        i0 = m.first;
        a0 = c;
        have0 = true;
      }
      if (m.second == 1 && (!have1 || m.first < i1)) {
        i1 = m.first;
        a1 = c;
        have1 = true;
      }
    }
    if (!have1) throw Error(ErrorCode::InvalidArgument, "branch is not simple");
    Rational s = i0 - i1;
    if (s > max_exp) return theta;
    AlgebraicReal c = -(a0 / a1);
    theta = theta + term(c, s);
    g = g.shift_z(c, s);
  }
  throw Error(ErrorCode::DepthLimitExceeded, "branch expansion did not reach u^" + exact::to_string(max_exp));
}

std::vector<Zone> explore_frame(const FrameForm& form, Frame f, const std::vector<ForcedArc>& forced,
                                const ExploreOptions& opt) {
  if (form.zero) throw Error(ErrorCode::InvalidArgument, "exploring an identically zero form");
  return Explorer(form, f, forced, opt).run();
}

}  // namespace pizza
