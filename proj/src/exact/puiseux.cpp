#include "pizza/exact/puiseux.hpp"

#include <algorithm>
#include <cmath>

#include "pizza/error.hpp"

namespace pizza::exact {

PuiseuxPoly PuiseuxPoly::monomial(const AlgebraicReal& c, const Rational& e) {
  PuiseuxPoly p;
  if (!c.is_zero()) p.terms_.push_back({c, e});
  return p;
}

PuiseuxPoly PuiseuxPoly::from_terms(std::vector<PTerm> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const PTerm& a, const PTerm& b) { return a.exp < b.exp; });
  PuiseuxPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const PTerm& t) { return t.coeff.is_zero(); });
  return p;
}

Exponent PuiseuxPoly::order() const {
  if (terms_.empty()) return Exponent::infinity();
  return Exponent(terms_.front().exp);
}

const PTerm& PuiseuxPoly::leading() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "leading term of zero Puiseux polynomial");
  return terms_.front();
}

bool PuiseuxPoly::all_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const PTerm& t) { return t.coeff.is_rational(); });
}

PuiseuxPoly PuiseuxPoly::operator-() const {
  PuiseuxPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  PuiseuxPoly out;
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      AlgebraicReal c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!c.is_zero()) out.terms_.push_back({c, a.terms_[i].exp});
      ++i;
      ++j;
    }
  }
  return out;
}

PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a + (-b); }

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  std::vector<PTerm> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) terms.push_back({x.coeff * y.coeff, x.exp + y.exp});
  return PuiseuxPoly::from_terms(std::move(terms));
}

bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

PuiseuxPoly PuiseuxPoly::scaled(const AlgebraicReal& c) const {
  if (c.is_zero()) return PuiseuxPoly();
  PuiseuxPoly p = *this;
  for (auto& t : p.terms_) t.coeff = t.coeff * c;
  return p;
}

PuiseuxPoly PuiseuxPoly::shifted(const Rational& e) const {
  PuiseuxPoly p = *this;
  for (auto& t : p.terms_) t.exp += e;
  return p;
}

PuiseuxPoly PuiseuxPoly::pow(unsigned n) const {
  PuiseuxPoly result = monomial(AlgebraicReal(1), Rational(0));
  PuiseuxPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

PuiseuxPoly PuiseuxPoly::truncated(const Rational& max_exp) const {
  PuiseuxPoly p;
  for (const auto& t : terms_)
    if (t.exp <= max_exp) p.terms_.push_back(t);
  return p;
}

double PuiseuxPoly::eval(double t) const {
  double s = 0;
  for (const auto& term : terms_) s += term.coeff.to_double() * std::pow(t, term.exp.get_d());
  return s;
}

std::string PuiseuxPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += t.coeff.is_rational() ? to_string(t.coeff.rational_value()) : "[" + t.coeff.str() + "]";
    if (t.exp != 0) out += "*" + var + "^" + to_string(t.exp);
  }
  return out;
}

int germ_compare(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  PuiseuxPoly d = a - b;
  if (d.is_zero()) return 0;
  return d.leading().coeff.sign();
}

}  // namespace pizza::exact
