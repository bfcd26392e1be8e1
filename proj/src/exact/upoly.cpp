#include "pizza/exact/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "pizza/error.hpp"

namespace pizza::exact {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

double QPoly::eval(double at) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
  return acc;
}

QPoly QPoly::derivative() const {
  if (coeffs_.size() <= 1) return QPoly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return QPoly(std::move(d));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] / b.lc();
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly r = *this;
  Rational l = lc();
  for (auto& c : r.coeffs_) c /= l;
  return r;
}

QPoly QPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm(1);
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g(0);
  for (const auto& c : coeffs_) {
    Rational s = c * den_lcm;
    ints.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (sgn(ints.back()) < 0) g = -g;
  std::vector<Rational> v;
  for (const auto& n : ints) v.emplace_back(Integer(n / g));
  return QPoly(std::move(v));
}

QPoly QPoly::shifted(const Rational& shift) const {
  // Horner in polynomial arithmetic.
  QPoly acc;
  QPoly lin(std::vector<Rational>{shift, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + QPoly(*it);
  return acc;
}

QPoly QPoly::scaled_arg(const Rational& k) const {
  std::vector<Rational> v = coeffs_;
  Rational pw(1);
  for (auto& c : v) {
    c *= pw;
    pw *= k;
  }
  return QPoly(std::move(v));
}

QPoly QPoly::reversed() const {
  std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
  return QPoly(std::move(v));
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    bool unit = a == 1 && i > 0;
    if (!unit) out << to_string(a);
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return p.primitive();
  QPoly g = gcd(p, p.derivative());
  return (p / g).primitive();
}

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  std::vector<QPoly> out;
  if (p.degree() <= 0) return out;
  QPoly a = p.monic();
  QPoly b = gcd(a, a.derivative());
  QPoly c = a / b;
  QPoly d = a.derivative() / b - c.derivative();
  while (c.degree() > 0) {
    QPoly g = gcd(c, d);
    out.push_back(g.primitive());
    c = c / g;
    d = d / g - c.derivative();
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

Rational resultant(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  int da = a.degree(), db = b.degree();
  if (db == 0) return pow(b.lc(), da);
  if (da == 0) return pow(a.lc(), db);
  QPoly r = a % b;
  if (r.is_zero()) return Rational(0);
  int dr = r.degree();
  Rational s = ((da * db) % 2 == 0) ? Rational(1) : Rational(-1);
  return s * pow(b.lc(), da - dr) * resultant(b, r);
}

Rational root_bound(const QPoly& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(static_cast<std::size_t>(i)) / p.lc());
    if (r > m) m = r;
  }
  return m + 1;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    QPoly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace {

int sign_changes(const std::vector<QPoly>& chain, const Rational& at) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int s = q.sign_at(at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const std::vector<QPoly>& chain, const Rational& lo, const Rational& hi) {
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

std::vector<RootInterval> isolate_squarefree(const QPoly& p) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) {
    Rational r = -p.coeff(0) / p.coeff(1);
    out.push_back({r, r});
    return out;
  }
  auto chain = sturm_chain(p);
  Rational b = root_bound(p);
  struct Job { Rational lo, hi; };
  std::vector<Job> stack{{-b, b}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    int n = sturm_count(chain, j.lo, j.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back({j.lo, j.hi});
      continue;
    }
    // Split at a point that is not a root; candidates 1/2, 1/3, 2/3, 1/4, ...
    Rational mid;
    for (long den = 2;; ++den) {
      bool found = false;
      for (long num = 1; num < den && !found; ++num) {
        mid = j.lo + (j.hi - j.lo) * Rational(num, den);
        mid.canonicalize();
        found = p.sign_at(mid) != 0;
      }
      if (found) break;
    }
    stack.push_back({mid, j.hi});
    stack.push_back({j.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace pizza::exact
