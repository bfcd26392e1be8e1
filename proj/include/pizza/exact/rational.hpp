#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pizza::exact {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }

// Smallest integer >= r.
Integer ceil(const Rational& r);
// Largest integer <= r.
Integer floor(const Rational& r);

// r^e for integer e (e may be negative when r != 0).
Rational pow(const Rational& r, long e);

// Simplest rational (smallest denominator, then numerator) in the open interval (lo, hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

double to_double(const Rational& r);

// Exact p-th root when r is a perfect p-th power (r > 0); nullopt-like flag via bool.
bool exact_root(const Rational& r, unsigned long p, Rational& out);

}  // namespace pizza::exact
