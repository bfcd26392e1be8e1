#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pizza/exact/rational.hpp"

namespace pizza::exact {

// Dense univariate polynomial over Q; coeffs_[i] multiplies x^i. The zero polynomial has no
// coefficients, otherwise the leading coefficient is nonzero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(const Rational& c);  // NOLINT(implicit): constant polynomial

  static QPoly monomial(const Rational& c, std::size_t degree);
  static QPoly x() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& lc() const { return coeffs_.back(); }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& at) const;
  double eval(double at) const;
  int sign_at(const Rational& at) const { return sgn(eval(at)); }

  QPoly derivative() const;
  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Euclidean division; divisor nonzero.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
  friend QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }
  friend QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }

  QPoly monic() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  QPoly primitive() const;

  // p(x + shift)
  QPoly shifted(const Rational& shift) const;
  // p(k·x)
  QPoly scaled_arg(const Rational& k) const;
  // x^deg · p(1/x)
  QPoly reversed() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

QPoly gcd(const QPoly& a, const QPoly& b);  // monic, or zero
QPoly squarefree_part(const QPoly& p);      // primitive
// Yun decomposition: result[k] holds the (primitive) product of factors of multiplicity k+1.
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

// Resultant over Q via the Euclidean remainder sequence.
Rational resultant(const QPoly& a, const QPoly& b);

// Cauchy bound: every real root lies in (-B, B).
Rational root_bound(const QPoly& p);

// Sturm chain of a squarefree polynomial.
std::vector<QPoly> sturm_chain(const QPoly& p);
// Number of distinct roots in the half-open interval (lo, hi].
int sturm_count(const std::vector<QPoly>& chain, const Rational& lo, const Rational& hi);

// Isolation of the real roots of a squarefree polynomial. Each entry is either an exact
// rational root (lo == hi) or an open interval (lo, hi) holding exactly one root with
// nonzero values at both endpoints. Sorted increasingly.
struct RootInterval {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
};
std::vector<RootInterval> isolate_squarefree(const QPoly& p);

}  // namespace pizza::exact
