#pragma once

#include <string>
#include <vector>

#include "pizza/exact/algebraic.hpp"
#include "pizza/exact/exponent.hpp"

namespace pizza::exact {

struct PTerm {
  AlgebraicReal coeff;
  Rational exp;
};

// Finite sum of c·u^e with strictly increasing rational exponents and nonzero coefficients.
// Arcs restrict exponents to >= 1; traces and normalized bases use arbitrary exponents.
class PuiseuxPoly {
 public:
  PuiseuxPoly() = default;
  PuiseuxPoly(const AlgebraicReal& c) : PuiseuxPoly(monomial(c, Rational(0))) {}  // NOLINT(implicit)
  static PuiseuxPoly monomial(const AlgebraicReal& c, const Rational& e);
  // Sorts, combines equal exponents and drops zeros.
  static PuiseuxPoly from_terms(std::vector<PTerm> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<PTerm>& terms() const { return terms_; }
  // Least exponent; ∞ for zero.
  Exponent order() const;
  const PTerm& leading() const;
  bool all_rational() const;

  PuiseuxPoly operator-() const;
  friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b);
  PuiseuxPoly scaled(const AlgebraicReal& c) const;
  // Multiply by u^e.
  PuiseuxPoly shifted(const Rational& e) const;
  PuiseuxPoly pow(unsigned n) const;
  // Terms with exponent <= max_exp.
  PuiseuxPoly truncated(const Rational& max_exp) const;

  double eval(double t) const;
  std::string str(const std::string& var = "u") const;

 private:
  std::vector<PTerm> terms_;
};

// Exact ordering of Puiseux polynomials as germs of functions at 0+: sign of the leading
// coefficient of a - b.
int germ_compare(const PuiseuxPoly& a, const PuiseuxPoly& b);

}  // namespace pizza::exact
