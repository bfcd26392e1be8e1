#pragma once

#include "pizza/core/pizza.hpp"
#include "pizza/germ/germ_spec.hpp"

namespace fixtures {

using namespace pizza;

inline Arc axis(const char* dir) { return Arc{parse_frame_dir(dir), PuiseuxPoly()}; }

inline GermSpec two_pieces(const char* a, const char* b, const char* first, const char* second) {
  return GermSpec{{GermPiece{axis(a), axis(b), parse_expression(first)},
                   GermPiece{axis(b), axis(a), parse_expression(second)}}};
}

// x^4+y^2 for x >= 0, x^2+y^2 for x <= 0.
inline GermSpec example1() { return two_pieces("-y", "+y", "x^4+y^2", "x^2+y^2"); }
// x^4+y^2 for y >= 0, x^4+y^4 for y <= 0.
inline GermSpec example2() { return two_pieces("+x", "-x", "x^4+y^2", "x^4+y^4"); }
// y^2-x^3 for x >= 0, x^2+y^2 for x <= 0.
inline GermSpec example3() { return two_pieces("-y", "+y", "y^2-x^3", "x^2+y^2"); }
// (x^6+y^6) divided by the example-1 germ.
inline GermSpec example4() { return two_pieces("-y", "+y", "(x^6+y^6)/(x^4+y^2)", "(x^6+y^6)/(x^2+y^2)"); }

inline Exponent q(long n, long d = 1) { return Exponent(exact::make_rational(n, d)); }
inline Exponent inf() { return Exponent::infinity(); }

inline Slice slice(Exponent beta, Exponent a, Exponent b, int sign, AffineWidth mu) { return {beta, {a, b}, sign, mu}; }
inline AffineWidth lin(long mn, long md, long cn, long cd) {
  return AffineWidth::linear(exact::make_rational(mn, md), exact::make_rational(cn, cd));
}

inline AbstractPizza example1_pizza() {
  return {{slice(q(1), q(4), q(2), 1, lin(1, 2, 0, 1)), slice(q(1), q(2), q(4), 1, lin(1, 2, 0, 1))}};
}
inline AbstractPizza example2_pizza() {
  return {{slice(q(1), q(4), q(2), 1, lin(1, 2, 0, 1)), slice(q(1), q(2), q(4), 1, lin(1, 2, 0, 1)),
           slice(q(1), q(4), q(4), 1, lin(0, 1, 1, 1))}};
}
inline AbstractPizza example3_pizza() {
  auto m = lin(1, 1, -3, 2);
  return {{slice(q(3, 2), q(3), inf(), -1, m), slice(q(3, 2), inf(), q(3), 1, m),
           slice(q(1), q(3), q(2), 1, lin(1, 2, 0, 1)), slice(q(1), q(2), q(3), 1, lin(1, 2, 0, 1)),
           slice(q(3, 2), q(3), inf(), 1, m), slice(q(3, 2), inf(), q(3), -1, m)}};
}
inline AbstractPizza example4_pizza() {
  return {{slice(q(1), q(4), q(2), 1, lin(-1, 2, 3, 1)), slice(q(1), q(2), q(4), 1, lin(-1, 2, 3, 1))}};
}

}  // namespace fixtures
