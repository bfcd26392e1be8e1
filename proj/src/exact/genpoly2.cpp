#include "pizza/exact/genpoly2.hpp"

#include <algorithm>

#include "pizza/error.hpp"

namespace pizza::exact {

GenPoly2 GenPoly2::constant(const AlgebraicReal& c) { return u_power(Rational(0), c); }

GenPoly2 GenPoly2::u_power(const Rational& e, const AlgebraicReal& c) {
  GenPoly2 g;
  g.add_term(e, 0, c);
  return g;
}

GenPoly2 GenPoly2::z() {
  GenPoly2 g;
  g.add_term(Rational(0), 1, AlgebraicReal(1));
  return g;
}

GenPoly2 GenPoly2::from_puiseux(const PuiseuxPoly& p) {
  GenPoly2 g;
  for (const auto& t : p.terms()) g.add_term(t.exp, 0, t.coeff);
  return g;
}

void GenPoly2::add_term(const Rational& i, unsigned j, const AlgebraicReal& c) {
  if (c.is_zero()) return;
  Monomial2 key{i, j};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

GenPoly2 operator+(const GenPoly2& a, const GenPoly2& b) {
  GenPoly2 out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m.first, m.second, c);
  return out;
}

GenPoly2 GenPoly2::operator-() const {
  GenPoly2 out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

GenPoly2 operator-(const GenPoly2& a, const GenPoly2& b) { return a + (-b); }

GenPoly2 operator*(const GenPoly2& a, const GenPoly2& b) {
  GenPoly2 out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
  return out;
}

GenPoly2 GenPoly2::pow(unsigned n) const {
  GenPoly2 result = constant(AlgebraicReal(1));
  GenPoly2 base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

unsigned GenPoly2::z_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

unsigned GenPoly2::min_z() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "min_z of zero polynomial");
  unsigned d = terms_.begin()->first.second;
  for (const auto& [m, c] : terms_) d = std::min(d, m.second);
  return d;
}

bool GenPoly2::is_z_free() const { return z_degree() == 0; }

GenPoly2 GenPoly2::shift_z(const AlgebraicReal& c, const Rational& alpha) const {
  const unsigned deg = z_degree();
  std::vector<AlgebraicReal> cpow{AlgebraicReal(1)};
  for (unsigned k = 1; k <= deg; ++k) cpow.push_back(cpow.back() * c);
  // binomial rows
  std::vector<std::vector<Integer>> binom(deg + 1);
  for (unsigned j = 0; j <= deg; ++j) {
    binom[j].assign(j + 1, Integer(1));
    for (unsigned l = 1; l < j; ++l) binom[j][l] = binom[j - 1][l - 1] + binom[j - 1][l];
  }
  GenPoly2 out;
  for (const auto& [m, a] : terms_) {
    const unsigned j = m.second;
    for (unsigned l = 0; l <= j; ++l) {
      AlgebraicReal coef = a * cpow[j - l] * AlgebraicReal(Rational(binom[j][l]));
      out.add_term(m.first + alpha * Rational(j - l), l, coef);
    }
  }
  return out;
}

PuiseuxPoly GenPoly2::substitute(const PuiseuxPoly& p) const {
  const unsigned deg = z_degree();
  std::vector<PuiseuxPoly> ppow{PuiseuxPoly(AlgebraicReal(1))};
  for (unsigned k = 1; k <= deg; ++k) ppow.push_back(ppow.back() * p);
  std::vector<PTerm> acc;
  PuiseuxPoly out;
  for (const auto& [m, a] : terms_) out = out + ppow[m.second].scaled(a).shifted(m.first);
  return out;
}

GenPoly2::Initial GenPoly2::initial(const Rational& alpha) const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "initial form of zero polynomial");
  Rational best;
  bool first = true;
  for (const auto& [m, a] : terms_) {
    Rational v = m.first + alpha * Rational(m.second);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  Initial out{best, {}};
  for (const auto& [m, a] : terms_) {
    if (m.first + alpha * Rational(m.second) != best) continue;
    if (out.poly.size() <= m.second) out.poly.resize(m.second + 1, AlgebraicReal(0));
    out.poly[m.second] = out.poly[m.second] + a;
  }
  return out;
}

Monomial2 GenPoly2::governing(const Rational& alpha) const {
  auto init = initial(alpha);
  Monomial2 found;
  int count = 0;
  for (const auto& [m, a] : terms_)
    if (m.first + alpha * Rational(m.second) == init.value) {
      found = m;
      ++count;
    }
  if (count != 1) throw Error(ErrorCode::InvalidArgument, "no unique governing monomial at " + to_string(alpha));
  return found;
}

std::string GenPoly2::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, a] : terms_) {
    if (!out.empty()) out += " + ";
    out += a.is_rational() ? to_string(a.rational_value()) : "[" + a.str() + "]";
    if (m.first != 0) out += "*u^" + to_string(m.first);
    if (m.second != 0) out += "*z^" + std::to_string(m.second);
  }
  return out;
}

NewtonPolygon newton_polygon(const GenPoly2& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "Newton polygon of zero polynomial");
  // Per z exponent keep the least u exponent.
  std::map<unsigned, Rational> best;
  for (const auto& [m, a] : f.terms()) {
    auto it = best.find(m.second);
    if (it == best.end() || m.first < it->second) best[m.second] = m.first;
  }
  // Start: least u exponent, ties broken by least z exponent.
  Monomial2 start = {best.begin()->second, best.begin()->first};
  for (const auto& [j, i] : best)
    if (i < start.first) start = {i, j};
  NewtonPolygon poly;
  poly.vertices.push_back(start);
  const unsigned jmin = best.begin()->first;
  Monomial2 cur = start;
  while (cur.second > jmin) {
    bool have = false;
    Rational best_slope;
    Monomial2 next;
    for (const auto& [j, i] : best) {
      if (j >= cur.second) continue;
      Rational s = (i - cur.first) / Rational(cur.second - j);
      if (!have || s < best_slope || (s == best_slope && j < next.second)) {
        have = true;
        best_slope = s;
        next = {i, j};
      }
    }
    NewtonEdge e{best_slope, poly.vertices.size() - 1, poly.vertices.size(), {}};
    e.edge_poly.assign(cur.second - next.second + 1, AlgebraicReal(0));
    for (const auto& [m, a] : f.terms()) {
      if (m.second < next.second || m.second > cur.second) continue;
      if (m.first + best_slope * Rational(m.second) == cur.first + best_slope * Rational(cur.second))
        e.edge_poly[m.second - next.second] = e.edge_poly[m.second - next.second] + a;
    }
    poly.vertices.push_back(next);
    poly.edges.push_back(std::move(e));
    cur = next;
  }
  return poly;
}

}  // namespace pizza::exact
