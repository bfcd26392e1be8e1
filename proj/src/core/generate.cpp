#include <random>

#include "pizza/core/pizza.hpp"

namespace pizza {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

// Rational in [lo, hi] with denominator <= 6.
Rational small_rational(Rng& rng, long lo, long hi) {
  long den = uniform(rng, 1, 6);
  return exact::make_rational(uniform(rng, lo * den, hi * den), den);
}

Rational random_slope(Rng& rng, bool positive) {
  static const long nums[] = {1, 1, 1, 2, 3};
  static const long dens[] = {1, 2, 3, 1, 2};
  long i = uniform(rng, 0, 4);
  Rational m = exact::make_rational(nums[i], dens[i]);
  return positive ? m : Rational(-m);
}

// Fill in β and μ for a slice whose segment is fixed. The minimum of μ over the segment is beta.
void assign_width(Slice& s, const Exponent& beta, Rng& rng) {
  s.beta = beta;
  const Exponent& a = s.Q.a;
  const Exponent& b = s.Q.b;
  if (a.is_infinite() && b.is_infinite()) {
    s.mu = AffineWidth::const_at_infinity(beta);
  } else if (s.Q.is_point()) {
    s.mu = AffineWidth::linear(Rational(0), beta.value());
  } else if (s.Q.contains_infinity()) {
    // Width must grow to ∞ at the infinite end.
    Rational m = random_slope(rng, true);
    const Rational& fin = a.is_finite() ? a.value() : b.value();
    s.mu = AffineWidth::linear(m, beta.value() - m * fin);
  } else {
    Rational m = random_slope(rng, coin(rng, 0.6));
    Rational lo = std::min(a.value(), b.value()), hi = std::max(a.value(), b.value());
    const Rational& at_min = m > 0 ? lo : hi;
    s.mu = AffineWidth::linear(m, beta.value() - m * at_min);
  }
}

Exponent random_beta(Rng& rng) {
  if (coin(rng, 0.5)) return Exponent(1);
  return Exponent(small_rational(rng, 1, 4));
}

}  // namespace

AbstractPizza generate_random_pizza(std::uint64_t seed, std::size_t k) {
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + 17);
  // Cyclic walk of endpoint values; pool of a few values so joints and points recur.
  std::vector<Exponent> pool;
  for (int i = 0; i < 4; ++i) pool.emplace_back(small_rational(rng, 1, 8));
  if (pool[0] == Exponent(0)) pool[0] = Exponent(2);
  auto draw = [&]() -> Exponent {
    if (coin(rng, 0.2)) return Exponent::infinity();
    Exponent e = pool[static_cast<std::size_t>(uniform(rng, 0, 3))];
    return e > Exponent(0) ? e : Exponent(1);
  };
  std::vector<Exponent> v(k + 1);
  v[0] = draw();
  for (std::size_t i = 1; i < k; ++i) v[i] = coin(rng, 0.25) ? v[i - 1] : draw();
  v[k] = v[0];

  AbstractPizza h;
  h.slices.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    h.slices[i].Q = {v[i], v[i + 1]};
    assign_width(h.slices[i], random_beta(rng), rng);
  }
  bool has_one = false;
  for (const auto& s : h.slices) has_one = has_one || s.beta == Exponent(1);
  if (!has_one) {
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(k) - 1));
    assign_width(h.slices[j], Exponent(1), rng);
  }

  // Signs are constant on runs between infinite joints.
  std::size_t start = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (v[i].is_infinite()) {
      start = i;
      break;
    }
  int sign = coin(rng, 0.5) ? 1 : -1;
  for (std::size_t n = 0; n < k; ++n) {
    std::size_t i = (start + n) % k;
    if (n > 0 && v[i].is_infinite()) sign = coin(rng, 0.5) ? 1 : -1;
    Slice& s = h.slices[i];
    bool inf_point = s.Q.a.is_infinite() && s.Q.b.is_infinite();
    // Order ∞ along every arc means the germ vanishes on the slice.
    s.sign = inf_point ? 0 : sign;
    if (inf_point) sign = coin(rng, 0.5) ? 1 : -1;
  }
  return h;
}

AbstractPizza random_refinement(const AbstractPizza& h, std::uint64_t seed) {
  Rng rng(seed * 0xD1B54A32D192ED03ULL + 5);
  AbstractPizza out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Slice& s = h.slices[i];
    // Split a non-point segment at an interior finite point.
    if (!s.Q.is_point() && coin(rng, 0.4)) {
      Rational t;
      if (s.Q.a.is_finite() && s.Q.b.is_finite()) {
        const Rational& a = s.Q.a.value();
        const Rational& b = s.Q.b.value();
        t = a + (b - a) * exact::make_rational(uniform(rng, 1, 5), 6);
      } else {
        t = (s.Q.a.is_finite() ? s.Q.a.value() : s.Q.b.value()) + small_rational(rng, 1, 3);
      }
      Slice l = s, r = s;
      l.Q.b = Exponent(t);
      r.Q.a = Exponent(t);
      l.beta = exact::min(s.mu.eval(l.Q.a), s.mu.eval(l.Q.b));
      r.beta = exact::min(s.mu.eval(r.Q.a), s.mu.eval(r.Q.b));
      out.slices.push_back(l);
      out.slices.push_back(r);
    } else {
      out.slices.push_back(s);
    }
    // Insert a point slice at a finite joint that op2 will absorb into the next slice.
    const Slice& next = h.at(i + 1);
    if (s.Q.b.is_finite() && coin(rng, 0.3)) {
      Slice p;
      p.Q = {s.Q.b, s.Q.b};
      p.sign = next.sign;
      Exponent w = next.mu.eval(s.Q.b);
      p.beta = w + Exponent(Rational(uniform(rng, 0, 2)));
      p.mu = AffineWidth::linear(Rational(0), p.beta.value());
      out.slices.push_back(p);
    }
  }
  return rotated(out, static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(out.size()) - 1)));
}

}  // namespace pizza
