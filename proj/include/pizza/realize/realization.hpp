#pragma once

#include <string>
#include <vector>

#include "pizza/core/pizza.hpp"
#include "pizza/germ/germ_spec.hpp"

namespace pizza {

// Formula for one slice and its parameters. Kinds: "zero", "constant", "finite" ((v'+u^β̃)^λ·u^r),
// "infinite" (v'^λ·u^r).
struct SliceFormula {
  Expr expr;
  std::string kind;
  Rational lambda{0}, r{0};
  Exponent beta_tilde;
  bool deep_at_lower = false;  // v' measured from the lower arc (else from the upper)
};

// Slice between two arcs of S1 with lower below upper in v; Q runs from lower to upper.
// Throws InvalidSlice.
SliceFormula realize_slice(const Slice& s, const Arc& lower, const Arc& upper);

// Ord-0 unit equal to ratio_lower on `lower` and ratio_upper on `upper` (arcs of S1, lower below
// upper): unit((1 − s)·ratio_lower + s·ratio_upper) with s = (y − lower)/(upper − lower).
Expr gluing_unit(const Expr& ratio_lower, const Expr& ratio_upper, const Arc& lower, const Arc& upper);

// Expression of the ratio of two expressions restricted to an S1 arc, as a function of x.
// Throws OrderMismatch when the restrictions have different orders.
Expr trace_ratio(const Expr& target, const Expr& current, const Arc& arc);

struct PieceProvenance {
  std::size_t slice;  // index in the input pizza
  Frame frame;
  SliceFormula formula;
  bool glued = false;
};

struct RealizedGerm {
  GermSpec germ;
  std::vector<PieceProvenance> provenance;  // one per piece
};

// Throws InvalidPizza.
RealizedGerm realize(const AbstractPizza& h);

// Arc v = η(u) of S1 as an expression in x.
Expr s1_arc_expr(const PuiseuxPoly& eta);

}  // namespace pizza
