#include "pizza/exact/rational.hpp"

#include <cctype>
#include <cmath>

#include "pizza/error.hpp"

namespace pizza::exact {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den))
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational pow(const Rational& r, long e) {
  Rational base = r;
  if (e < 0) {
    base = 1 / r;
    e = -e;
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational out(n, d);
  out.canonicalize();
  return out;
}

// Stern-Brocot descent; lo < hi required.
Rational simplest_between(const Rational& lo, const Rational& hi) {
  Integer fl = floor(lo);
  if (fl + 1 < hi) {
    // An integer fits strictly inside; pick the one closest to zero.
    Integer a = fl + 1;
    Integer b = ceil(hi) - 1;
    if (a <= 0 && b >= 0) return Rational(0);
    return Rational(a > 0 ? a : b);
  }
  // Both endpoints within [fl, fl+1]; recurse on reciprocals of fractional parts.
  Rational lf = lo - fl, hf = hi - fl;
  if (lf == 0) {
    // interval (fl, fl + hf) with hf <= 1: find simplest in (0, hf) = 1/(simplest in (1/hf, inf))
    Integer n = floor(1 / hf) + 1;
    return Rational(fl) + Rational(1) / Rational(n);
  }
  Rational inner = simplest_between(1 / hf, 1 / lf);
  return Rational(fl) + 1 / inner;
}

double to_double(const Rational& r) { return r.get_d(); }

bool exact_root(const Rational& r, unsigned long p, Rational& out) {
  if (r < 0) return false;
  Integer n, d;
  if (mpz_root(n.get_mpz_t(), r.get_num_mpz_t(), p) == 0) return false;
  if (mpz_root(d.get_mpz_t(), r.get_den_mpz_t(), p) == 0) return false;
  out = Rational(n, d);
  out.canonicalize();
  return true;
}

}  // namespace pizza::exact
