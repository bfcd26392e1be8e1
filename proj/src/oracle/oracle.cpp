#include "pizza/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <unordered_map>

#include <boost/multiprecision/mpfr.hpp>

#include "pizza/error.hpp"
#include "pizza/germ/builder.hpp"

namespace pizza {

namespace {

using F = boost::multiprecision::mpfr_float;
using LD = long double;
using Kind = ExprNode::Kind;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Working precision for the duration of a computation.
struct Precision {
  explicit Precision(int bits) : saved(F::default_precision()) {
    F::default_precision(static_cast<unsigned>(std::max(bits, 64) * 0.30103) + 1);
  }
  ~Precision() { F::default_precision(saved); }
  unsigned saved;
};

LD eps() { return std::numeric_limits<F>::epsilon().convert_to<LD>(); }

F to_f(const Rational& r) {
  F out;
  mpfr_set_q(out.backend().data(), r.get_mpq_t(), MPFR_RNDN);
  return out;
}

F to_f(const AlgebraicReal& a) {
  if (a.is_rational()) return to_f(a.rational_value());
  AlgebraicReal r = a.refined(static_cast<unsigned>(F::default_precision() * 3.33) + 16);
  return to_f(Rational((r.lo() + r.hi()) / 2));
}

// Value with a running bound on its rounding error; the bound only needs a few digits.
struct Val {
  F v = 0;
  LD err = 0;
};

LD mag(const F& v) { return abs(v).convert_to<LD>(); }

// Expression flattened into instructions with constants at working precision; shared
// subexpressions are evaluated once.
class Program {
 public:
  explicit Program(const Expr& e) : eps_(eps()) { root_ = add(e); }

  Val run(const Val& x, const Val& y) const {
    std::vector<Val> r(ops_.size());
    for (std::size_t i = 0; i < ops_.size(); ++i) r[i] = step(ops_[i], r, x, y);
    return r[root_];
  }

 private:
  struct Op {
    Kind kind;
    int a = -1, b = -1;
    F c;            // constant, or the exponent
    LD cd = 0;      // exponent as a float
    long pint = 0;  // integer exponent
    bool integral = false;
  };

  int add(const Expr& e) {
    if (auto it = index_.find(e.get()); it != index_.end()) return it->second;
    Op op;
    op.kind = e->kind;
    if (e->lhs) op.a = add(e->lhs);
    if (e->rhs && e->kind != Kind::Pow && e->kind != Kind::Neg && e->kind != Kind::Unit) op.b = add(e->rhs);
    if (e->kind == Kind::Const || e->kind == Kind::Pow) {
      op.c = to_f(e->value);
      op.cd = op.c.convert_to<LD>();
      op.integral = e->value.get_den() == 1 && e->value.get_num().fits_slong_p();
      if (op.integral) op.pint = e->value.get_num().get_si();
    }
    ops_.push_back(op);
    return index_[e.get()] = static_cast<int>(ops_.size()) - 1;
  }

  Val step(const Op& op, const std::vector<Val>& r, const Val& x, const Val& y) const {
    switch (op.kind) {
      case Kind::Const: return {op.c, eps_ * mag(op.c)};
      case Kind::X: return x;
      case Kind::Y: return y;
      case Kind::Add:
      case Kind::Sub: {
        const Val &a = r[op.a], &b = r[op.b];
        F s = op.kind == Kind::Add ? F(a.v + b.v) : F(a.v - b.v);
        return {s, a.err + b.err + eps_ * mag(s)};
      }
      case Kind::Mul: {
        const Val &a = r[op.a], &b = r[op.b];
        F p = a.v * b.v;
        return {p, mag(a.v) * b.err + mag(b.v) * a.err + a.err * b.err + eps_ * mag(p)};
      }
      case Kind::Div: {
        const Val &a = r[op.a], &b = r[op.b];
        LD mb = mag(b.v);
        if (mb <= b.err) throw Error(ErrorCode::DenominatorVanishes, "denominator vanishes numerically");
        F q = a.v / b.v;
        return {q, (a.err + mag(q) * b.err) / (mb - b.err) + eps_ * mag(q)};
      }
      case Kind::Neg: return {-r[op.a].v, r[op.a].err};
      case Kind::Pow: {
        const Val& a = r[op.a];
        LD ma = mag(a.v);
        F out;
        if (ma <= a.err) {
          // The base is indistinguishable from zero.
          if (op.cd <= 0) throw Error(ErrorCode::DenominatorVanishes, "non-positive power of a vanishing base");
          if (op.integral) mpfr_pow_si(out.backend().data(), a.v.backend().data(), op.pint, MPFR_RNDN);
          return {out, std::pow(2 * a.err, op.cd)};
        }
        if (op.integral) {
          mpfr_pow_si(out.backend().data(), a.v.backend().data(), op.pint, MPFR_RNDN);
        } else {
          if (a.v < 0) throw Error(ErrorCode::PositivityUnverifiable, "fractional power of a negative value");
          out = pow(a.v, op.c);
        }
        return {out, std::fabs(op.cd) * mag(out) / ma * a.err + eps_ * mag(out)};
      }
      case Kind::Unit: return r[op.a];
    }
    return {};
  }

  LD eps_;
  std::vector<Op> ops_;
  std::unordered_map<const ExprNode*, int> index_;
  int root_ = 0;
};

// (x, y) of the frame point (u, v).
std::pair<Val, Val> to_xy(Frame f, const Val& u, const Val& v) {
  switch (f) {
    case Frame::S1: return {u, v};
    case Frame::S2: return {v, u};
    case Frame::S3: return {{-u.v, u.err}, v};
    case Frame::S4: return {v, {-u.v, u.err}};
  }
  return {u, v};
}

// Arc coefficients and exponents at working precision.
struct NumericArc {
  std::vector<std::pair<F, F>> terms;

  explicit NumericArc(const PuiseuxPoly& eta) {
    for (const auto& t : eta.terms()) terms.push_back({to_f(t.coeff), to_f(t.exp)});
  }
  Val at(const F& t) const {
    Val out;
    for (const auto& [c, e] : terms) {
      F m = c * pow(t, e);
      out.v += m;
      out.err += 4 * eps() * mag(m);
    }
    return out;
  }
};

bool vanishes(const Val& f, const OracleConfig& cfg) {
  LD m = mag(f.v);
  return m <= 8 * f.err || m < cfg.floor;
}

// A sample whose evaluation failed numerically is kept as lost.
struct Sample {
  F t;
  Val f;
  bool lost = false;
};

std::vector<Sample> sample_along(const GermSpec& g, const Arc& gamma, const OracleConfig& cfg) {
  if (cfg.count < 4 || !(cfg.t0 > 0) || !(cfg.ratio > 0 && cfg.ratio < 1))
    throw Error(ErrorCode::InvalidArgument, "oracle needs count >= 4, t0 > 0 and 0 < ratio < 1");
  const Expr& e = g.pieces[piece_of_arc(g, gamma)].expr;
  NumericArc arc(gamma.eta);
  Program prog(e);
  std::vector<Sample> out;
  F t = F(cfg.t0), ratio = F(cfg.ratio);
  for (int j = 0; j < cfg.count; ++j, t *= ratio) {
    auto [x, y] = to_xy(gamma.frame, Val{t, 0}, arc.at(t));
    try {
      out.push_back({t, prog.run(x, y)});
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DenominatorVanishes && err.code() != ErrorCode::PositivityUnverifiable) throw;
      out.push_back({t, {}, true});
    }
  }
  return out;
}

// Every sample keeps at least six digits above its rounding error.
bool clean(const std::vector<Sample>& samples, const OracleConfig& cfg) {
  for (const auto& s : samples)
    if (s.lost || !(mag(s.f.v) > 1e6 * s.f.err) || mag(s.f.v) < cfg.floor) return false;
  return true;
}

struct Line {
  F slope, intercept;
};

Line least_squares(const std::vector<std::pair<F, F>>& pts) {
  F n = static_cast<long>(pts.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [a, b] : pts) sx += a, sy += b, sxx += a * a, sxy += a * b;
  F slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {slope, (sy - slope * sx) / n};
}

std::optional<FitReport> fit_samples(const std::vector<Sample>& samples, const OracleConfig& cfg) {
  std::vector<std::pair<F, F>> pts;
  FitReport rep;
  for (const auto& s : samples) {
    if (s.lost || vanishes(s.f, cfg)) continue;
    pts.push_back({log(s.t), log(abs(s.f.v))});
    rep.sign = s.f.v > 0 ? 1 : -1;
    if (rep.count == 0) rep.t_max = static_cast<double>(s.t);
    rep.t_min = static_cast<double>(s.t);
    ++rep.count;
  }
  if (pts.size() < 4) return std::nullopt;
  Line l = least_squares(pts);
  F res = 0;
  for (const auto& [a, b] : pts) res = max(res, F(abs(b - (l.slope * a + l.intercept))));
  std::size_t h = pts.size() / 2;
  Line first = least_squares({pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(h)});
  Line second = least_squares({pts.begin() + static_cast<std::ptrdiff_t>(h), pts.end()});
  rep.slope = static_cast<double>(l.slope);
  rep.intercept = static_cast<double>(l.intercept);
  rep.max_residual = static_cast<double>(res);
  rep.half_gap = static_cast<double>(abs(first.slope - second.slope));
  rep.converged = rep.max_residual < cfg.residual_gate && rep.half_gap < cfg.tolerance / 2;
  return rep;
}

double to_double(const Exponent& e) { return e.is_infinite() ? kInf : exact::to_double(e.value()); }

// Counterclockwise position of a point of frame f with u > 0: 3·index + o·v/u + 1.
double position(Frame f, double u, double v) { return 3 * frame_index(f) + orientation(f) * v / u + 1; }

double arc_position(const Arc& arc, Frame at, double u) {
  Arc a = canonical_arc(arc);
  // Only the frame matters for arcs of other frames; a start seam sits at the very beginning.
  if (a.frame != at) return 3 * frame_index(a.frame) + (a.eta == start_seam(a.frame) ? 0 : 1);
  return position(at, u, static_cast<double>(NumericArc(a.eta).at(F(u)).v));
}


// Zone of the fine decomposition with its slice and counterclockwise boundaries.
struct FineZone {
  Slice slice;
  Frame frame;
  ZoneBoundary start, end;
};

std::vector<FineZone> fine_zones(const GermSpec& g) {
  auto zones = assemble_zones(g);
  AbstractPizza h = compute_pizza(g);
  std::vector<FineZone> out;
  for (std::size_t i = 0; i < zones.size(); ++i) {
    const Zone& z = zones[i].zone;
    bool ccw = orientation(z.frame) > 0;
    out.push_back({h.slices[i], z.frame, ccw ? z.lower : z.upper, ccw ? z.upper : z.lower});
  }
  return out;
}

using Runs = std::vector<std::pair<std::size_t, std::size_t>>;

// Agreement of a zone with the claimed slice covering it: equal widths count, points inside a
// non-point slice and opposite signs count against.
int zone_score(const Slice& zone, const Slice& claimed) {
  int score = 0;
  if (!zone.Q.is_point() && zone.mu == claimed.mu) score += 2;
  if (zone.Q.is_point() && !claimed.Q.is_point()) score -= 1;
  if (zone.sign != claimed.sign) score -= 2;
  return score;
}

// Best split of the zones (from `start`, cyclic) into consecutive runs [first, last] whose
// endpoints match the claimed slices.
struct Cover {
  const std::vector<FineZone>& z;
  const AbstractPizza& h;
  std::size_t start;
  Runs runs, best;
  int best_score = 0;
  bool found = false;
  long budget = 100000;

  void search(std::size_t i, std::size_t used, int score) {
    const std::size_t n = z.size();
    if (--budget < 0) return;
    if (i == h.size()) {
      if (used == n && (!found || score > best_score)) found = true, best_score = score, best = runs;
      return;
    }
    if (used >= n || z[(start + used) % n].slice.Q.a != h.slices[i].Q.a) return;
    int run_score = 0;
    for (std::size_t last = used; last < n; ++last) {
      const Slice& zs = z[(start + last) % n].slice;
      run_score += zone_score(zs, h.slices[i]);
      if (zs.Q.b != h.slices[i].Q.b) continue;
      runs.push_back({(start + used) % n, (start + last) % n});
      search(i + 1, last + 1, score + run_score);
      runs.pop_back();
    }
  }
};

PuiseuxPoly boundary_eta(const ZoneBoundary& b, const Rational& upto) {
  return b.branch ? b.branch->expansion(upto) : b.eta;
}

// Order check of f along γ against an expected value (+inf for ∞).
CrosscheckItem ord_item(const GermSpec& g, std::size_t slice, const std::string& check, const Arc& gamma,
                        double expected, const OracleConfig& cfg) {
  CrosscheckItem it;
  it.slice = slice;
  it.check = check;
  it.arc = to_string(gamma);
  it.expected = expected;
  if (std::isfinite(expected) && expected >= cfg.max_ord) {
    it.skipped = it.pass = true;
    return it;
  }
  try {
    FitReport r = estimate_ord(g, gamma, cfg);
    it.measured = r.slope;
    it.residual = r.max_residual;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AllSamplesZero) throw;
    it.measured = kInf;
  }
  if (std::isinf(expected)) {
    // A truncated branch leaves a tiny but nonzero remainder.
    it.pass = std::isinf(it.measured) || it.measured >= cfg.max_ord;
    it.deviation = it.pass ? 0 : kInf;
  } else if (std::isinf(it.measured)) {
    it.deviation = kInf;
  } else {
    it.deviation = std::fabs(it.measured - expected);
    it.pass = it.deviation < cfg.tolerance && it.residual < cfg.residual_gate;
  }
  return it;
}

}  // namespace

double eval_expr(const Expr& e, double x, double y) {
  Precision prec(OracleConfig{}.precision_bits);
  return static_cast<double>(Program(e).run(Val{F(x), 0}, Val{F(y), 0}).v);
}

double eval_germ(const GermSpec& g, double x, double y) {
  if (g.pieces.empty()) throw Error(ErrorCode::OutsideAllSectors, "germ has no pieces");
  if (x == 0 && y == 0) return eval_expr(g.pieces.front().expr, 0, 0);
  Frame f;
  double u, v;
  if (std::fabs(y) <= x) {
    f = Frame::S1, u = x, v = y;
  } else if (y >= std::fabs(x)) {
    f = Frame::S2, u = y, v = x;
  } else if (-x >= std::fabs(y)) {
    f = Frame::S3, u = -x, v = y;
  } else {
    f = Frame::S4, u = -y, v = x;
  }
  const double p = position(f, u, v), tol = 1e-12;
  for (const auto& piece : g.pieces) {
    double a = arc_position(piece.from, f, u), b = arc_position(piece.to, f, u);
    bool whole = canonical_arc(piece.from) == canonical_arc(piece.to);
    bool inside = whole || (a <= b ? (a - tol <= p && p <= b + tol) : (p >= a - tol || p <= b + tol));
    if (inside) return eval_expr(piece.expr, x, y);
  }
  throw Error(ErrorCode::OutsideAllSectors, "no piece holds the point");
}

FitReport estimate_ord(const GermSpec& g, const Arc& gamma, const OracleConfig& cfg) {
  // Samples closer to 0 are closer to the asymptotic slope, so the deepest clean range wins. Two
  // ranges that agree may still sit on a plateau before the asymptotic regime. A range that turns
  // unclean after a clean one has lost digits.
  // A range that loses digits is sampled again at doubled precision, up to cfg.max_precision_bits.
  OracleConfig c = cfg;
  std::optional<FitReport> best, fallback;
  for (int attempt = 0; attempt <= cfg.refinements; ++attempt, c.t0 *= cfg.deepen) {
    std::optional<FitReport> r;
    bool ok = false;
    for (int bits = cfg.precision_bits;; bits *= 2) {
      Precision prec(bits);
      auto samples = sample_along(g, gamma, c);
      r = fit_samples(samples, c);
      ok = r && clean(samples, c);
      bool lost = std::any_of(samples.begin(), samples.end(), [](const Sample& s) { return s.lost; });
      if (ok || (!r && !lost) || bits * 2 > cfg.max_precision_bits) break;
    }
    if (best && !ok) break;
    if (ok) {
      best = r;
    } else if (r && (!fallback || r->max_residual < fallback->max_residual)) {
      fallback = r;
    }
  }
  if (best) return *best;
  if (fallback) return *fallback;
  throw Error(ErrorCode::AllSamplesZero, "f vanishes at the samples along " + to_string(gamma));
}

bool CrosscheckReport::pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return aligned;
}

CrosscheckReport crosscheck_pizza(const GermSpec& g, const AbstractPizza& h, const OracleConfig& cfg) {
  require_valid(h);
  Precision prec(cfg.precision_bits);
  auto zones = fine_zones(g);
  CrosscheckReport rep;
  Runs runs;
  AbstractPizza claimed;
  int best = 0;
  for (bool rev : {false, true}) {
    AbstractPizza c = rev ? reversed(h) : h;
    for (std::size_t s = 0; s < zones.size(); ++s) {
      Cover cov{zones, c, s, {}, {}};
      cov.search(0, 0, 0);
      if (cov.found && (!rep.aligned || cov.best_score > best)) {
        rep.aligned = true;
        rep.reversed = rev;
        rep.first_zone = s;
        best = cov.best_score;
        runs = cov.best;
        claimed = c;
      }
    }
  }
  if (!rep.aligned) {
    CrosscheckItem it;
    it.check = "alignment";
    rep.items.push_back(it);
    return rep;
  }
  const std::size_t k = claimed.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Slice& s = claimed.slices[i];
    // Index in h of the claimed slice.
    std::size_t idx = rep.reversed ? k - 1 - i : i;
    const FineZone& first = zones[runs[i].first];
    const FineZone& last = zones[runs[i].second];
    Exponent mu_a = s.mu.is_linear() ? s.mu.eval(s.Q.a) : Exponent::infinity();
    Exponent mu_b = s.mu.is_linear() ? s.mu.eval(s.Q.b) : Exponent::infinity();
    Rational reach = Rational(24);
    for (const auto& m : {mu_a, mu_b})
      if (m.is_finite()) reach = std::max(reach, Rational(m.value() + 2));
    Arc start{first.frame, boundary_eta(first.start, reach)};
    Arc end{last.frame, boundary_eta(last.end, reach)};
    rep.items.push_back(ord_item(g, idx, "ord-start", start, to_double(s.Q.a), cfg));
    rep.items.push_back(ord_item(g, idx, "ord-end", end, to_double(s.Q.b), cfg));

    // Points absorbed at the ends of the run keep Q but widen the sector; probes use the core.
    const std::size_t n = zones.size();
    std::size_t len = (runs[i].second + n - runs[i].first) % n + 1, lo = 0, hi = len - 1;
    while (lo < hi && zones[(runs[i].first + lo) % n].slice.Q.is_point()) ++lo;
    while (hi > lo && zones[(runs[i].first + hi) % n].slice.Q.is_point()) --hi;
    const FineZone& core_first = zones[(runs[i].first + lo) % n];
    const FineZone& core_last = zones[(runs[i].first + hi) % n];
    Arc core_start{core_first.frame, boundary_eta(core_first.start, reach)};
    Arc core_end{core_last.frame, boundary_eta(core_last.end, reach)};
    Exponent t = tord(core_start, core_end);
    Rational beta = t.is_finite() ? t.value() : s.beta.value();
    bool deep_start = mu_a >= mu_b;
    const Exponent& mu_deep = deep_start ? mu_a : mu_b;
    const Arc& deep = deep_start ? core_start : core_end;
    int dir = deep_start ? orientation(deep.frame) : -orientation(deep.frame);
    Arc middle = deep;
    for (int j = 1; j <= 3; ++j) {
      Rational kappa = mu_deep.is_finite() && mu_deep.value() > beta
                           ? Rational(beta + (mu_deep.value() - beta) * exact::make_rational(j, 4))
                           : Rational(beta + exact::make_rational(j, 2));
      Arc probe{deep.frame, deep.eta + PuiseuxPoly::monomial(AlgebraicReal(dir), kappa)};
      if (j == 2) middle = probe;
      double expected;
      if (s.sign == 0) {
        expected = kInf;
      } else if (s.Q.is_point()) {
        expected = to_double(s.Q.a);
      } else if (s.mu.is_linear() && s.mu.m != 0) {
        expected = exact::to_double(Rational((kappa - s.mu.c) / s.mu.m));
      } else {
        CrosscheckItem it;
        it.slice = idx;
        it.check = "ord-probe";
        it.arc = to_string(probe);
        it.skipped = it.pass = true;  // constant width does not determine the order
        rep.items.push_back(it);
        continue;
      }
      rep.items.push_back(ord_item(g, idx, "ord-probe", probe, expected, cfg));
    }
    CrosscheckItem sg;
    sg.slice = idx;
    sg.check = "sign";
    sg.arc = to_string(middle);
    sg.expected = s.sign;
    try {
      sg.measured = estimate_ord(g, middle, cfg).sign;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AllSamplesZero) throw;
      sg.measured = 0;
    }
    sg.deviation = std::fabs(sg.measured - sg.expected);
    sg.pass = sg.deviation == 0;
    rep.items.push_back(sg);
  }
  return rep;
}

}  // namespace pizza
