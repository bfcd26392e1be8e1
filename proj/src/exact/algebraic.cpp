#include "pizza/exact/algebraic.hpp"

#include <algorithm>
#include <atomic>

#include "pizza/error.hpp"
#include "pizza/exact/mpoly.hpp"

namespace pizza::exact {

namespace {

std::atomic<unsigned> g_precision_bits{4096};

void check_budget(unsigned steps) {
  if (steps > g_precision_bits.load())
    throw Error(ErrorCode::PrecisionExhausted,
                "interval refinement exceeded " + std::to_string(g_precision_bits.load()) + " bits");
}

struct Interval {
  Rational lo, hi;
};

Interval add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval mul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval eval_interval(const QPoly& g, const Interval& x) {
  Interval acc{Rational(0), Rational(0)};
  const auto& c = g.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add(mul(acc, x), Interval{*it, *it});
  return acc;
}

Interval interval_of(const AlgebraicReal& a) { return {a.lo(), a.hi()}; }

// Locate the unique root of r (any polynomial vanishing at the target) inside the shrinking
// enclosure produced by `enclose`, refining the operands through `refine` until the
// enclosure isolates exactly one root.
template <class Enclose, class Refine>
AlgebraicReal locate_root(const QPoly& r_in, Enclose enclose, Refine refine) {
  if (r_in.is_zero()) throw Error(ErrorCode::InvalidArgument, "vanishing resultant");
  QPoly r = squarefree_part(r_in);
  auto chain = sturm_chain(r);
  for (unsigned step = 0;; ++step) {
    check_budget(step);
    Interval j = enclose();
    if (j.lo == j.hi) return AlgebraicReal(j.lo);
    if (r.sign_at(j.lo) != 0 && r.sign_at(j.hi) != 0 && sturm_count(chain, j.lo, j.hi) == 1)
      return AlgebraicReal::from_root(r, RootInterval{j.lo, j.hi});
    refine();
  }
}

// Coefficients (in t) of p(x - t) with entries in Q[x].
std::vector<QPoly> shifted_in_t(const QPoly& p) {
  const int n = p.degree();
  std::vector<QPoly> out(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    const Rational& bk = p.coeff(static_cast<std::size_t>(k));
    if (bk == 0) continue;
    Integer binom(1);
    for (int j = 0; j <= k; ++j) {
      if (j > 0) binom = binom * (k - j + 1) / j;
      Rational c = bk * Rational(binom) * ((j % 2 == 0) ? 1 : -1);
      out[static_cast<std::size_t>(j)] =
          out[static_cast<std::size_t>(j)] + QPoly::monomial(c, static_cast<std::size_t>(k - j));
    }
  }
  return out;
}

// Coefficients (in t) of t^n p(x / t).
std::vector<QPoly> homogenized_in_t(const QPoly& p) {
  const int n = p.degree();
  std::vector<QPoly> out(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k)
    out[static_cast<std::size_t>(n - k)] =
        QPoly::monomial(p.coeff(static_cast<std::size_t>(k)), static_cast<std::size_t>(k));
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

std::vector<QPoly> constant_coeffs(const QPoly& p) {
  std::vector<QPoly> out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

QPoly resultant_in_t(const std::vector<QPoly>& a, const std::vector<QPoly>& b) {
  return sylvester_resultant(a, b, QPoly(), QPoly(Rational(1)));
}

}  // namespace

void set_precision_bits(unsigned bits) { g_precision_bits.store(bits); }
unsigned precision_bits() { return g_precision_bits.load(); }

AlgebraicReal AlgebraicReal::from_root(const QPoly& p, const RootInterval& iv) {
  if (iv.exact()) return AlgebraicReal(iv.lo);
  QPoly q = squarefree_part(p);
  if (q.degree() < 1) throw Error(ErrorCode::InvalidArgument, "constant defining polynomial");
  if (q.degree() == 1) return AlgebraicReal(Rational(-q.coeff(0) / q.coeff(1)));
  AlgebraicReal out;
  out.poly_ = std::make_shared<const QPoly>(q);
  out.lo_ = iv.lo;
  out.hi_ = iv.hi;
  // A rational root s/t of q has t | lc(q); such rationals are 1/lc^2 apart.
  Rational l = abs(q.lc());
  Rational width = 1 / (l * l * 2);
  unsigned step = 0;
  while (out.poly_ && out.hi_ - out.lo_ >= width) {
    check_budget(++step);
    out = out.bisected();
  }
  if (!out.poly_) return out;
  Rational cand = simplest_between(out.lo_, out.hi_);
  if (cand.get_den() <= l.get_num() && q.eval(cand) == 0) return AlgebraicReal(cand);
  return out;
}

const Rational& AlgebraicReal::rational_value() const {
  if (poly_) throw Error(ErrorCode::InvalidArgument, "irrational algebraic number " + str());
  return lo_;
}

QPoly AlgebraicReal::defining_polynomial() const {
  if (poly_) return *poly_;
  return QPoly(std::vector<Rational>{-lo_, Rational(1)}).primitive();
}

AlgebraicReal AlgebraicReal::bisected() const {
  if (!poly_) return *this;
  Rational mid = (lo_ + hi_) / 2;
  int sm = poly_->sign_at(mid);
  if (sm == 0) return AlgebraicReal(mid);
  AlgebraicReal out = *this;
  if (sm * poly_->sign_at(lo_) < 0) out.hi_ = mid;
  else out.lo_ = mid;
  return out;
}

AlgebraicReal AlgebraicReal::refined(unsigned bits) const {
  AlgebraicReal out = *this;
  Rational width(1);
  mpz_class den(1);
  den <<= bits;
  width /= den;
  unsigned step = 0;
  while (out.poly_ && out.hi_ - out.lo_ > width) {
    check_budget(++step);
    out = out.bisected();
  }
  return out;
}

double AlgebraicReal::to_double() const {
  AlgebraicReal r = refined(64);
  return Rational((r.lo_ + r.hi_) / 2).get_d();
}

int AlgebraicReal::sign() const {
  if (!poly_) return sgn(lo_);
  AlgebraicReal r = *this;
  unsigned step = 0;
  while (r.poly_ && r.lo_ < 0 && r.hi_ > 0) {
    check_budget(++step);
    r = r.bisected();
  }
  if (!r.poly_) return sgn(r.lo_);
  return r.lo_ >= 0 ? 1 : -1;
}

AlgebraicReal AlgebraicReal::operator-() const {
  if (!poly_) return AlgebraicReal(Rational(-lo_));
  AlgebraicReal out;
  out.poly_ = std::make_shared<const QPoly>(poly_->scaled_arg(Rational(-1)).primitive());
  out.lo_ = -hi_;
  out.hi_ = -lo_;
  return out;
}

AlgebraicReal AlgebraicReal::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  if (!poly_) return AlgebraicReal(Rational(1 / lo_));
  AlgebraicReal r = *this;
  unsigned step = 0;
  while (r.poly_ && r.lo_ < 0 && r.hi_ > 0) {
    check_budget(++step);
    r = r.bisected();
  }
  if (!r.poly_) return AlgebraicReal(Rational(1 / r.lo_));
  // Endpoints may be zero only at one side; move off zero.
  while (r.poly_ && (r.lo_ == 0 || r.hi_ == 0)) {
    check_budget(++step);
    r = r.bisected();
  }
  if (!r.poly_) return AlgebraicReal(Rational(1 / r.lo_));
  AlgebraicReal out;
  out.poly_ = std::make_shared<const QPoly>(r.poly_->reversed().primitive());
  out.lo_ = 1 / r.hi_;
  out.hi_ = 1 / r.lo_;
  return out;
}

AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicReal(Rational(a.lo_ + b.lo_));
  if (b.is_rational()) return b + a;
  if (a.is_rational()) {
    if (a.lo_ == 0) return b;
    AlgebraicReal out;
    out.poly_ = std::make_shared<const QPoly>(b.poly_->shifted(-a.lo_).primitive());
    out.lo_ = b.lo_ + a.lo_;
    out.hi_ = b.hi_ + a.lo_;
    return out;
  }
  QPoly r = resultant_in_t(constant_coeffs(*a.poly_), shifted_in_t(*b.poly_));
  AlgebraicReal x = a, y = b;
  return locate_root(
      r, [&] { return add(interval_of(x), interval_of(y)); },
      [&] {
        x = x.bisected();
        y = y.bisected();
        if (x.is_rational() || y.is_rational()) {
          // Fall back to the exact path on the next enclosure.
          AlgebraicReal s = x + y;
          x = s;
          y = AlgebraicReal(0);
        }
      });
}

AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b) { return a + (-b); }

AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicReal(Rational(a.lo_ * b.lo_));
  if (b.is_rational()) return b * a;
  if (a.is_rational()) {
    if (a.lo_ == 0) return AlgebraicReal(0);
    if (a.lo_ == 1) return b;
    AlgebraicReal out;
    out.poly_ = std::make_shared<const QPoly>(b.poly_->scaled_arg(1 / a.lo_).primitive());
    Rational l = b.lo_ * a.lo_, h = b.hi_ * a.lo_;
    out.lo_ = std::min(l, h);
    out.hi_ = std::max(l, h);
    return out;
  }
  QPoly r = resultant_in_t(constant_coeffs(*a.poly_), homogenized_in_t(*b.poly_));
  AlgebraicReal x = a, y = b;
  return locate_root(
      r, [&] { return mul(interval_of(x), interval_of(y)); },
      [&] {
        x = x.bisected();
        y = y.bisected();
        if (x.is_rational() || y.is_rational()) {
          AlgebraicReal s = x * y;
          x = s;
          y = AlgebraicReal(1);
        }
      });
}

AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) { return a * b.inverse(); }

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.lo_, b.lo_);
  if (a.is_rational()) return -compare(b, a);
  AlgebraicReal x = a;
  unsigned step = 0;
  if (b.is_rational()) {
    const Rational& r = b.lo_;
    while (x.poly_ && x.lo_ < r && r < x.hi_) {
      check_budget(++step);
      x = x.bisected();
    }
    if (!x.poly_) return cmp(x.lo_, r);
    return x.hi_ <= r ? -1 : 1;
  }
  AlgebraicReal y = b;
  QPoly g = gcd(*a.poly_, *b.poly_);
  bool may_equal = false;
  std::vector<QPoly> gchain;
  if (g.degree() >= 1) {
    gchain = sturm_chain(g);
    may_equal = sturm_count(gchain, x.lo_, x.hi_) == 1 && sturm_count(gchain, y.lo_, y.hi_) == 1;
  }
  for (;;) {
    check_budget(++step);
    if (!x.poly_ || !y.poly_) return compare(x, y);
    if (x.hi_ <= y.lo_) return -1;
    if (y.hi_ <= x.lo_) return 1;
    if (may_equal) {
      Rational lo = std::min(x.lo_, y.lo_), hi = std::max(x.hi_, y.hi_);
      if (g.sign_at(lo) != 0 && g.sign_at(hi) != 0 && sturm_count(gchain, lo, hi) == 1) return 0;
    }
    x = x.bisected();
    y = y.bisected();
  }
}

AlgebraicReal AlgebraicReal::pow(long e) const {
  if (!poly_) return AlgebraicReal(exact::pow(lo_, e));
  if (e < 0) return inverse().pow(-e);
  AlgebraicReal result(1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

AlgebraicReal AlgebraicReal::root(unsigned long d) const {
  if (sign() <= 0) throw Error(ErrorCode::InvalidArgument, "root of a non-positive number");
  if (d == 1) return *this;
  if (!poly_) {
    Rational out;
    if (exact_root(lo_, d, out)) return AlgebraicReal(out);
  }
  QPoly base = defining_polynomial();
  // q(t) = base(t^d)
  std::vector<Rational> c(static_cast<std::size_t>(base.degree()) * d + 1, Rational(0));
  for (int k = 0; k <= base.degree(); ++k) c[static_cast<std::size_t>(k) * d] = base.coeff(static_cast<std::size_t>(k));
  QPoly q(std::move(c));
  AlgebraicReal x = *this;
  // rational t with t^d <= v (lo) or >= v (hi), by bisection on [0, max(v,1)]
  auto root_bound_below = [d](const Rational& v) {
    if (v <= 0) return Rational(0);
    Rational l(0), h = std::max(v, Rational(1));
    for (int i = 0; i < 60; ++i) {
      Rational m = (l + h) / 2;
      if (exact::pow(m, static_cast<long>(d)) <= v) l = m;
      else h = m;
    }
    return l;
  };
  auto root_bound_above = [d](const Rational& v) {
    Rational l(0), h = std::max(v, Rational(1));
    for (int i = 0; i < 60; ++i) {
      Rational m = (l + h) / 2;
      if (exact::pow(m, static_cast<long>(d)) >= v) h = m;
      else l = m;
    }
    return h;
  };
  while (x.lo_ <= 0) x = x.bisected();
  return locate_root(
      q, [&] { return Interval{root_bound_below(x.lo_), root_bound_above(x.hi_)}; },
      [&] {
        x = x.bisected();
        if (!x.poly_) x = AlgebraicReal(x.lo_);
      });
}

std::string AlgebraicReal::str() const {
  if (!poly_) return to_string(lo_);
  return "root of " + poly_->str() + " in (" + to_string(lo_) + ", " + to_string(hi_) + ")";
}

int sign_at(const QPoly& g, const AlgebraicReal& c) {
  if (c.is_rational()) return g.sign_at(c.rational_value());
  QPoly p = c.defining_polynomial();
  QPoly h = gcd(g, p);
  if (h.degree() >= 1 && sturm_count(sturm_chain(h), c.lo(), c.hi()) == 1) return 0;
  QPoly gs = squarefree_part(g);
  if (gs.degree() < 1) return g.sign_at(c.lo());
  auto chain = sturm_chain(gs);
  AlgebraicReal x = c;
  unsigned step = 0;
  for (;;) {
    check_budget(++step);
    if (x.is_rational()) return g.sign_at(x.rational_value());
    if (gs.sign_at(x.lo()) != 0 && gs.sign_at(x.hi()) != 0 && sturm_count(chain, x.lo(), x.hi()) == 0)
      return g.sign_at(x.lo());
    x = x.bisected();
  }
}

AlgebraicReal eval_at(const QPoly& g, const AlgebraicReal& c) {
  if (c.is_rational()) return AlgebraicReal(g.eval(c.rational_value()));
  if (g.degree() <= 0) return AlgebraicReal(g.coeff(0));
  // res_t(p(t), x - g(t))
  std::vector<QPoly> rhs;
  for (int j = 0; j <= g.degree(); ++j) {
    QPoly coef(Rational(-g.coeff(static_cast<std::size_t>(j))));
    if (j == 0) coef = coef + QPoly::x();
    rhs.push_back(coef);
  }
  QPoly r = resultant_in_t(constant_coeffs(c.defining_polynomial()), rhs);
  AlgebraicReal x = c;
  return locate_root(
      r, [&] { return eval_interval(g, interval_of(x)); },
      [&] { x = x.bisected(); });
}

std::vector<RealRoot> isolate_real_roots(const QPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "isolate_real_roots of zero polynomial");
  std::vector<RealRoot> out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (const auto& iv : isolate_squarefree(parts[k]))
      out.push_back({AlgebraicReal::from_root(parts[k], iv), static_cast<int>(k + 1)});
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return out;
}

namespace {

AlgebraicReal eval_apoly(const APoly& p, const AlgebraicReal& x) {
  AlgebraicReal acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

APoly derivative(const APoly& p) {
  APoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * AlgebraicReal(static_cast<long>(i)));
  return d;
}

}  // namespace

std::vector<RealRoot> isolate_real_roots(const APoly& p_in) {
  APoly p = p_in;
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  if (p.empty()) throw Error(ErrorCode::InvalidArgument, "isolate_real_roots of zero polynomial");
  bool all_rational = std::all_of(p.begin(), p.end(), [](const AlgebraicReal& a) { return a.is_rational(); });
  if (all_rational) {
    std::vector<Rational> c;
    for (const auto& a : p) c.push_back(a.rational_value());
    return isolate_real_roots(QPoly(std::move(c)));
  }
  // Norm: eliminate each distinct irrational coefficient against its defining polynomial.
  std::vector<AlgebraicReal> gens;
  std::vector<std::size_t> gen_of(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_rational()) continue;
    std::size_t j = 0;
    while (j < gens.size() && gens[j] != p[i]) ++j;
    if (j == gens.size()) gens.push_back(p[i]);
    gen_of[i] = j + 1;
  }
  const std::size_t nv = gens.size() + 1;
  MPoly big(nv);
  for (std::size_t i = 0; i < p.size(); ++i) {
    MPoly::Monomial m(nv, 0);
    m[0] = static_cast<unsigned>(i);
    if (gen_of[i] == 0) {
      big.add_term(m, p[i].rational_value());
    } else {
      m[gen_of[i]] = 1;
      big.add_term(m, Rational(1));
    }
  }
  for (std::size_t j = gens.size(); j >= 1; --j) {
    std::vector<MPoly> a, b;
    unsigned d = big.degree_in(j);
    for (unsigned k = 0; k <= d; ++k) a.push_back(big.coeff_in(j, k));
    QPoly m = gens[j - 1].defining_polynomial();
    for (const auto& c : m.coeffs()) b.push_back(MPoly::constant(nv, c));
    big = sylvester_resultant(a, b, MPoly(nv), MPoly::constant(nv, Rational(1)));
  }
  QPoly norm = big.to_univariate();
  std::vector<RealRoot> out;
  for (const auto& cand : isolate_real_roots(norm)) {
    int mult = 0;
    APoly q = p;
    while (!q.empty() && eval_apoly(q, cand.value).is_zero()) {
      ++mult;
      q = derivative(q);
    }
    if (mult > 0) out.push_back({cand.value, mult});
  }
  return out;
}

}  // namespace pizza::exact
