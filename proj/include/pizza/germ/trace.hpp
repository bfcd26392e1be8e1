#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pizza/exact/puiseux.hpp"
#include "pizza/germ/arc.hpp"
#include "pizza/germ/expr.hpp"

namespace pizza {

using exact::PuiseuxPoly;

// Restriction of an expression to an arc, as a function of the arc parameter u:
// coeff · u^exp · Π base_j^power_j with distinct monic bases (leading term 1·u^0) and nonzero
// rational powers. coeff = 0 encodes the zero trace. Equality and sums go through the ratio of
// the operands, whose integer-power part is expanded.
class Trace {
 public:
  Trace() = default;
  explicit Trace(const PuiseuxPoly& p);

  bool is_zero() const { return coeff_.is_zero(); }
  // True when the trace is a plain Puiseux polynomial.
  bool is_pure() const;
  PuiseuxPoly pure() const;  // requires is_pure()
  Exponent order() const;
  const AlgebraicReal& coeff() const { return coeff_; }
  const Rational& exp() const { return exp_; }
  const std::vector<std::pair<PuiseuxPoly, Rational>>& bases() const { return bases_; }

  friend Trace operator+(const Trace& a, const Trace& b);
  friend Trace operator*(const Trace& a, const Trace& b);
  Trace operator-() const;
  Trace inverse() const;
  Trace pow(const Rational& p) const;
  friend bool operator==(const Trace& a, const Trace& b);

  // Numeric value at u = t.
  double eval(double t) const;
  std::string str() const;

 private:
  void absorb(const PuiseuxPoly& monic, const Rational& power);

  AlgebraicReal coeff_{0};
  Rational exp_{0};
  std::vector<std::pair<PuiseuxPoly, Rational>> bases_;
};

// Trace of an expression along an arc in the plane coordinates given by frame_to_plane.
// unit(e) is traced as e.
Trace trace_along(const Expr& e, const Arc& arc);

}  // namespace pizza
