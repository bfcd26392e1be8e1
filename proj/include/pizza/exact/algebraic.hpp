#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pizza/exact/rational.hpp"
#include "pizza/exact/upoly.hpp"

namespace pizza::exact {

// Bisection budget per refinement request; exceeding it raises PrecisionExhausted.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// A real algebraic number: either an exact rational, or the unique root of a squarefree
// primitive integer polynomial (degree >= 2) inside an open rational interval whose
// endpoints are not roots. Values are immutable; refinement returns a new value.
class AlgebraicReal {
 public:
  AlgebraicReal() : lo_(0), hi_(0) {}
  AlgebraicReal(const Rational& r) : lo_(r), hi_(r) {}  // NOLINT(implicit)
  AlgebraicReal(long n) : lo_(n), hi_(n) {}             // NOLINT(implicit)

  // Root of p isolated by iv; p need not be squarefree. Detects rational values.
  static AlgebraicReal from_root(const QPoly& p, const RootInterval& iv);

  bool is_rational() const { return !poly_; }
  const Rational& rational_value() const;  // InvalidArgument if irrational
  // Defining polynomial (degree 1 for rationals).
  QPoly defining_polynomial() const;
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  int sign() const;
  bool is_zero() const { return is_rational() && lo_ == 0; }

  // Interval of width at most 2^-bits (exact for rationals).
  AlgebraicReal refined(unsigned bits) const;
  // Bisect once.
  AlgebraicReal bisected() const;
  double to_double() const;

  AlgebraicReal operator-() const;
  AlgebraicReal inverse() const;
  friend AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b);

  friend int compare(const AlgebraicReal& a, const AlgebraicReal& b);
  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }
  friend bool operator!=(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) != 0; }
  friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; }
  friend bool operator>(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) > 0; }
  friend bool operator<=(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) >= 0; }

  // x^e for integer e (x != 0 when e < 0).
  AlgebraicReal pow(long e) const;
  // Positive real root x^(1/d) of a positive x.
  AlgebraicReal root(unsigned long d) const;

  // "p/q" for rationals, otherwise "root of <poly> in (lo, hi)".
  std::string str() const;

 private:
  std::shared_ptr<const QPoly> poly_;
  Rational lo_, hi_;
};

int compare(const AlgebraicReal& a, const AlgebraicReal& b);

// Sign of g(c), exact. Uses gcd / Sturm on the defining polynomial of c.
int sign_at(const QPoly& g, const AlgebraicReal& c);
// g(c) as an algebraic number.
AlgebraicReal eval_at(const QPoly& g, const AlgebraicReal& c);

// Univariate polynomial with algebraic coefficients (index = degree).
using APoly = std::vector<AlgebraicReal>;

struct RealRoot {
  AlgebraicReal value;
  int multiplicity;
};

// All distinct real roots of p (not identically zero), increasing, with multiplicities.
std::vector<RealRoot> isolate_real_roots(const APoly& p);
std::vector<RealRoot> isolate_real_roots(const QPoly& p);

}  // namespace pizza::exact
