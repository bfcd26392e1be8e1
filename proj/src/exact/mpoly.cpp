#include "pizza/exact/mpoly.hpp"

#include <algorithm>

namespace pizza::exact {

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  MPoly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, Rational(1));
  return p;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

MPoly MPoly::coeff_in(std::size_t var, unsigned k) const {
  MPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] != k) continue;
    Monomial mm = m;
    mm[var] = 0;
    out.add_term(mm, c);
  }
  return out;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  out.nvars_ = std::max(a.nvars_, b.nvars_);
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      MPoly::Monomial m(out.nvars_, 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

QPoly MPoly::to_univariate() const {
  std::vector<Rational> v;
  for (const auto& [m, c] : terms_) {
    if (v.size() <= m[0]) v.resize(m[0] + 1, Rational(0));
    v[m[0]] += c;
  }
  return QPoly(std::move(v));
}

}  // namespace pizza::exact
