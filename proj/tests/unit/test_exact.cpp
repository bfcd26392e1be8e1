#include "doctest.h"

#include "pizza/error.hpp"
#include "pizza/exact/algebraic.hpp"
#include "pizza/exact/exponent.hpp"
#include "pizza/exact/rational.hpp"
#include "pizza/exact/upoly.hpp"

using namespace pizza;
using namespace pizza::exact;

namespace {
QPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v);
}
}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(-2)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("simplest rational between") {
  CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
  CHECK(simplest_between(Rational(-7, 2), Rational(-3, 2)) == Rational(-2));
  CHECK(simplest_between(Rational(-1, 2), Rational(1, 2)) == Rational(0));
}

TEST_CASE("exponent comparison and arithmetic") {
  Exponent a(Rational(3, 2)), b(Rational(2)), inf = Exponent::infinity();
  CHECK(a < b);
  CHECK(b < inf);
  CHECK(inf == Exponent::infinity());
  CHECK((a + inf).is_infinite());
  CHECK((a + b) == Exponent(Rational(7, 2)));
  CHECK_THROWS_AS(inf - inf, Error);
  CHECK(Exponent::parse("inf").is_infinite());
  CHECK(Exponent::parse("5/3") == Exponent(Rational(5, 3)));
  CHECK(inf.str() == "inf");
}

TEST_CASE("sturm root isolation") {
  auto roots = isolate_real_roots(poly({-1, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].value == AlgebraicReal(-1));
  CHECK(roots[1].value == AlgebraicReal(1));
  CHECK(isolate_real_roots(poly({1, 0, 1})).empty());
  auto r2 = isolate_real_roots(poly({-2, 0, 1}));
  REQUIRE(r2.size() == 2);
  CHECK_FALSE(r2[1].value.is_rational());
  CHECK((r2[1].value - AlgebraicReal(Rational(3, 2))).sign() == -1);
  CHECK(r2[1].value.to_double() == doctest::Approx(1.41421356));
}

TEST_CASE("multiplicities") {
  // (x-1)^2 (x+2)
  auto roots = isolate_real_roots(poly({2, -3, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].value == AlgebraicReal(-2));
  CHECK(roots[0].multiplicity == 1);
  CHECK(roots[1].value == AlgebraicReal(1));
  CHECK(roots[1].multiplicity == 2);
}

TEST_CASE("algebraic arithmetic") {
  AlgebraicReal s2 = isolate_real_roots(poly({-2, 0, 1}))[1].value;
  AlgebraicReal s3 = isolate_real_roots(poly({-3, 0, 1}))[1].value;
  CHECK(s2 * s2 == AlgebraicReal(2));
  CHECK((s2 * s2).is_rational());
  CHECK((s2 + s3).to_double() == doctest::Approx(1.41421356 + 1.7320508));
  CHECK(s2 * s3 == AlgebraicReal(6).root(2));
  CHECK(s2 - s2 == AlgebraicReal(0));
  CHECK(s2.inverse() * AlgebraicReal(2) == s2);
  CHECK(s2.pow(4) == AlgebraicReal(4));
  CHECK(AlgebraicReal(Rational(27, 8)).root(3) == AlgebraicReal(Rational(3, 2)));
  CHECK(s2 != s3);
  CHECK(s2 < s3);
  CHECK(sign_at(poly({-2, 0, 1}), s2) == 0);
  CHECK(sign_at(poly({-3, 0, 1}), s2) == -1);
  CHECK(eval_at(poly({0, 0, 1}), s3) == AlgebraicReal(3));
}

TEST_CASE("roots with algebraic coefficients") {
  AlgebraicReal s2 = isolate_real_roots(poly({-2, 0, 1}))[1].value;
  // x^2 - 2*sqrt2*x + 2 = (x - sqrt2)^2
  APoly p{AlgebraicReal(2), -(s2 * AlgebraicReal(2)), AlgebraicReal(1)};
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].value == s2);
  CHECK(roots[0].multiplicity == 2);
}

TEST_CASE("precision budget") {
  unsigned old = precision_bits();
  set_precision_bits(3);
  AlgebraicReal s2 = isolate_real_roots(poly({-2, 0, 1}))[1].value;
  CHECK_THROWS_AS(s2.refined(200), Error);
  set_precision_bits(old);
}
