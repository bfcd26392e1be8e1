#pragma once

#include <vector>

#include "pizza/exact/genpoly2.hpp"
#include "pizza/germ/arc.hpp"
#include "pizza/germ/expr.hpp"

namespace pizza {

using exact::GenPoly2;

// base^power with base a generalized polynomial in (u, v) of a frame (v is the GenPoly2 z).
struct FrameFactor {
  GenPoly2 base;
  Rational power;
};

// An expression in one frame: scalar · u^r0 · Π base_k^power_k · (unit nodes).
struct FrameForm {
  bool zero = false;
  AlgebraicReal scalar{1};
  Rational r0{0};
  std::vector<FrameFactor> factors;
  int units = 0;
};

// Throws UnsupportedExpression for shapes outside the rational / prepared-product classes and
// PositivityUnverifiable for non-integer powers of negative constants.
FrameForm to_frame_form(const Expr& e, Frame f);

// Sum expression as a generalized polynomial in the frame (no division by non-constants).
GenPoly2 to_frame_poly(const Expr& e, Frame f);

// Order of the form along v = eta(u); ∞ if a factor with positive power vanishes identically.
// Throws DenominatorVanishes if a factor with negative power vanishes identically.
Exponent ord_of_form(const FrameForm& form, const PuiseuxPoly& eta);

}  // namespace pizza
