#include "doctest.h"

#include "fixtures.hpp"
#include "pizza/error.hpp"
#include "pizza/germ/builder.hpp"
#include "pizza/germ/trace.hpp"
#include "pizza/realize/realization.hpp"

using namespace pizza;
using exact::make_rational;
using exact::Rational;
using fixtures::inf;
using fixtures::lin;
using fixtures::q;
using fixtures::slice;

namespace {

PuiseuxPoly mono(long c, Rational e) { return PuiseuxPoly::monomial(AlgebraicReal(c), e); }

Arc s1(const PuiseuxPoly& eta) { return Arc{Frame::S1, eta}; }

Exponent ord_on(const Expr& e, const PuiseuxPoly& eta) { return trace_along(e, s1(eta)).order(); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

bool round_trips(const AbstractPizza& h) {
  RealizedGerm r = realize(h);
  ComputeOptions o;
  o.minimal = true;
  return equivalent(compute_pizza(r.germ, o), minimal_pizza(h)).has_value();
}

}  // namespace

TEST_CASE("slice formula with the deep end at the lower arc") {
  Slice s = slice(q(1), q(4), q(2), 1, lin(1, 2, 0, 1));
  SliceFormula f = realize_slice(s, s1(PuiseuxPoly()), s1(mono(1, 1)));
  CHECK(f.kind == "finite");
  CHECK(f.deep_at_lower);
  CHECK(f.lambda == 2);
  CHECK(f.r == 0);
  CHECK(f.beta_tilde == q(2));
  CHECK(ord_on(f.expr, PuiseuxPoly()) == q(4));
  CHECK(ord_on(f.expr, mono(1, 1)) == q(2));
  CHECK(ord_on(f.expr, mono(1, make_rational(3, 2))) == q(3));
  CHECK(ord_on(f.expr, mono(5, 7)) == q(4));
}

TEST_CASE("slice formula with an infinite deep end") {
  Slice s = slice(q(3, 2), q(3), inf(), -1, lin(1, 1, -3, 2));
  PuiseuxPoly upper = mono(1, make_rational(3, 2));
  SliceFormula f = realize_slice(s, s1(PuiseuxPoly()), s1(upper));
  CHECK(f.kind == "infinite");
  CHECK_FALSE(f.deep_at_lower);
  CHECK(ord_on(f.expr, PuiseuxPoly()) == q(3));
  CHECK(ord_on(f.expr, upper).is_infinite());
  CHECK(ord_on(f.expr, upper - mono(1, 2)) == q(7, 2));
  // The sign is negative inside the slice.
  CHECK(trace_along(f.expr, s1(mono(1, 2))).coeff().sign() < 0);
}

TEST_CASE("point and zero slice formulas") {
  SliceFormula p = realize_slice(slice(q(2), q(5), q(5), 1, lin(0, 1, 2, 1)), s1(PuiseuxPoly()), s1(mono(1, 2)));
  CHECK(p.kind == "constant");
  CHECK(ord_on(p.expr, PuiseuxPoly()) == q(5));
  CHECK(ord_on(p.expr, mono(1, 2)) == q(5));

  Slice z = slice(q(1), inf(), inf(), 0, AffineWidth::const_at_infinity(q(1)));
  CHECK(realize_slice(z, s1(mono(-1, 1)), s1(mono(1, 1))).kind == "zero");
  z.sign = 1;
  CHECK(code_of([&] { realize_slice(z, s1(mono(-1, 1)), s1(mono(1, 1))); }) == ErrorCode::InvalidSlice);
}

TEST_CASE("gluing unit takes the prescribed traces on both arcs") {
  Arc lower = s1(mono(-1, 1) * PuiseuxPoly::monomial(AlgebraicReal(make_rational(1, 3)), Rational(0)));
  Arc upper = s1(mono(1, 1));
  Expr lo = parse_expression("2+x");
  Expr hi = parse_expression("3");
  Expr g = gluing_unit(lo, hi, lower, upper);
  Trace tl = trace_along(g, lower), tu = trace_along(g, upper), mid = trace_along(g, s1(PuiseuxPoly()));
  CHECK(tl.order() == q(0));
  CHECK(tl.coeff() == AlgebraicReal(2));
  CHECK(tu.coeff() == AlgebraicReal(3));
  CHECK(mid.order() == q(0));
}

TEST_CASE("trace ratio needs equal orders") {
  Arc a = s1(PuiseuxPoly());
  CHECK(code_of([&] { trace_ratio(parse_expression("x^2"), parse_expression("x^3"), a); }) ==
        ErrorCode::OrderMismatch);
  CHECK(code_of([&] { trace_ratio(parse_expression("y"), parse_expression("y^2"), a); }) ==
        ErrorCode::OrderMismatch);
  Expr r = trace_ratio(parse_expression("2*x^2+y"), parse_expression("x^2"), a);
  CHECK(trace_along(r, a).coeff() == AlgebraicReal(2));
}

TEST_CASE("realization rejects invalid pizzas") {
  AbstractPizza h = fixtures::example1_pizza();
  h.slices[0].beta = q(2);
  h.slices[1].beta = q(2);
  CHECK(code_of([&] { realize(h); }) == ErrorCode::InvalidPizza);
}

TEST_CASE("realized examples are valid germs with matching pizzas") {
  for (const auto& h : {fixtures::example1_pizza(), fixtures::example2_pizza(), fixtures::example3_pizza(),
                        fixtures::example4_pizza()}) {
    RealizedGerm r = realize(h);
    CHECK_NOTHROW(validate_germ(r.germ));
    CHECK(r.provenance.size() == r.germ.pieces.size());
    for (const auto& p : r.provenance) CHECK(p.slice < h.size());
    CHECK(round_trips(h));
  }
}

TEST_CASE("wrap slice is split along the other frames") {
  RealizedGerm r = realize(fixtures::example1_pizza());
  int outside = 0;
  for (const auto& p : r.provenance) outside += p.frame != Frame::S1;
  CHECK(outside == 3);
  for (std::size_t i = 0; i < r.germ.pieces.size(); ++i)
    if (r.provenance[i].frame != Frame::S1) CHECK_FALSE(r.provenance[i].glued);
}

TEST_CASE("random pizzas round trip through a realization") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    AbstractPizza h = generate_random_pizza(seed, 1 + seed % 7);
    INFO("seed " << seed << ": " << to_string(h));
    CHECK(round_trips(h));
  }
}

TEST_CASE("refinements realize to the same minimal pizza") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    AbstractPizza h = generate_random_pizza(seed + 1000, 2 + seed % 4);
    AbstractPizza r = random_refinement(h, seed);
    INFO("seed " << seed << ": " << to_string(r));
    ComputeOptions o;
    o.minimal = true;
    CHECK(equivalent(compute_pizza(realize(r).germ, o), minimal_pizza(h)).has_value());
  }
}
