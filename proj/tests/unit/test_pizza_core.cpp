#include "doctest.h"

#include <random>

#include "pizza/core/pizza.hpp"
#include "pizza/error.hpp"

using namespace pizza;

namespace {

Exponent E(const char* s) { return Exponent::parse(s); }

Slice lin(const char* beta, const char* a, const char* b, int sign, const char* m, const char* c) {
  return Slice{E(beta), {E(a), E(b)}, sign, AffineWidth::linear(exact::parse_rational(m), exact::parse_rational(c))};
}

AbstractPizza example3() {
  return {{lin("3/2", "3", "inf", -1, "1", "-3/2"), lin("3/2", "inf", "3", 1, "1", "-3/2"),
           lin("1", "3", "2", 1, "1/2", "0"), lin("1", "2", "3", 1, "1/2", "0"),
           lin("3/2", "3", "inf", 1, "1", "-3/2"), lin("3/2", "inf", "3", -1, "1", "-3/2")}};
}

AbstractPizza example1() { return {{lin("1", "4", "2", 1, "1/2", "0"), lin("1", "2", "4", 1, "1/2", "0")}}; }

bool has_axiom(const std::vector<Violation>& v, const std::string& id) {
  for (const auto& x : v)
    if (x.axiom == id) return true;
  return false;
}

}  // namespace

TEST_CASE("width evaluation") {
  auto mu = AffineWidth::linear(Rational(1), Rational(-3, 2));
  CHECK(mu.eval(E("3")) == E("3/2"));
  CHECK(mu.eval(E("inf")).is_infinite());
  CHECK(AffineWidth::linear(Rational(0), Rational(2)).eval(E("inf")) == E("2"));
  CHECK_THROWS_AS(AffineWidth::linear(Rational(-1), Rational(6)).eval(E("inf")), Error);
  CHECK(AffineWidth::const_at_infinity(E("3/2")).eval(E("inf")) == E("3/2"));
  CHECK_THROWS_AS(AffineWidth::const_at_infinity(E("3/2")).eval(E("2")), Error);
}

TEST_CASE("validation of fixtures and mutations") {
  CHECK(validate_pizza(example3()).empty());
  CHECK(validate_pizza(example1()).empty());

  auto broken = example3();
  broken.slices[1].Q.a = E("3");
  auto v = validate_pizza(broken);
  CHECK(has_axiom(v, "continuity"));

  AbstractPizza bad_min{{lin("1", "4", "6", 1, "1", "-2"), lin("1", "6", "4", 1, "1/2", "0")}};
  CHECK(has_axiom(validate_pizza(bad_min), "min-equals-beta"));

  auto signs = example1();
  signs.slices[1].sign = -1;
  CHECK(has_axiom(validate_pizza(signs), "sign-continuity"));

  AbstractPizza no_one{{lin("2", "4", "4", 1, "0", "2")}};
  CHECK(has_axiom(validate_pizza(no_one), "beta-one"));

  auto zero = example1();
  zero.slices[0].sign = 0;
  zero.slices[1].sign = 0;
  CHECK(has_axiom(validate_pizza(zero), "zero-sign"));

  AbstractPizza empty;
  CHECK(has_axiom(validate_pizza(empty), "nonempty"));
}

TEST_CASE("single zero slice is valid") {
  AbstractPizza z{{Slice{E("1"), {E("inf"), E("inf")}, 0, AffineWidth::const_at_infinity(E("1"))}}};
  CHECK(validate_pizza(z).empty());
  CHECK(find_simplifications(z).empty());
}

TEST_CASE("op1 merge") {
  AbstractPizza h{{lin("1", "2", "3", 1, "1/2", "0"), lin("3/2", "3", "4", 1, "1/2", "0"),
                   lin("2", "4", "2", 1, "1/2", "0")}};
  // Make the third slice consistent: μ = q/2 on [4,2] has min 1.
  h.slices[2].beta = E("1");
  REQUIRE(validate_pizza(h).empty());
  auto ops = find_simplifications(h);
  REQUIRE(!ops.empty());
  CHECK(ops.front() == Simplification{0, SimplificationKind::Op1});
  auto m = apply_simplification(h, ops.front());
  REQUIRE(m.size() == 2);
  CHECK(m.slices[0].Q == DirectedSegment{E("2"), E("4")});
  CHECK(m.slices[0].beta == E("1"));
  CHECK(validate_pizza(m).empty());
}

TEST_CASE("opposite directions block op1") {
  CHECK(find_simplifications(example1()).empty());
  CHECK(find_simplifications(example3()).empty());
}

TEST_CASE("op2 point merges") {
  Slice pt = lin("2", "4", "4", 1, "0", "2");
  Slice dec = lin("1", "4", "2", 1, "1/2", "0");
  Slice inc = lin("1", "2", "4", 1, "1/2", "0");
  AbstractPizza h{{pt, dec, inc}};
  REQUIRE(validate_pizza(h).empty());
  auto ops = find_simplifications(h);
  bool left = false, right = false;
  for (auto& o : ops) {
    left = left || (o.index == 0 && o.kind == SimplificationKind::Op2LeftPoint);
    right = right || (o.index == 2 && o.kind == SimplificationKind::Op2RightPoint);
  }
  CHECK(left);
  CHECK(right);
  auto a = apply_simplification(h, {0, SimplificationKind::Op2LeftPoint});
  CHECK(a.size() == 2);
  CHECK(a.slices[0] == dec);
  auto b = apply_simplification(h, {2, SimplificationKind::Op2RightPoint});
  CHECK(b.size() == 2);
  CHECK(equivalent(a, b).has_value());
  CHECK_THROWS_AS(apply_simplification(h, {1, SimplificationKind::Op1}), Error);
}

TEST_CASE("op2 blocked by a narrow point") {
  // μ_{i+1}(4) = 2 > β_i = 3/2
  Slice pt = lin("3/2", "4", "4", 1, "0", "3/2");
  Slice dec = lin("1", "4", "2", 1, "1/2", "0");
  Slice inc = lin("1", "2", "4", 1, "1/2", "0");
  AbstractPizza h{{pt, dec, inc}};
  REQUIRE(validate_pizza(h).empty());
  CHECK(find_simplifications(h).empty());
}

TEST_CASE("two equal points merge to the smaller beta") {
  Slice p1 = lin("3", "4", "4", 1, "0", "3");
  Slice p2 = lin("5/2", "4", "4", 1, "0", "5/2");
  Slice dec = lin("1", "4", "2", 1, "1/2", "0");
  Slice inc = lin("1", "2", "4", 1, "1/2", "0");
  AbstractPizza h{{p1, p2, dec, inc}};
  auto m = minimal_pizza(h);
  CHECK(m.size() == 2);
  AbstractPizza only{{p1, p2, lin("1", "4", "4", 1, "0", "1")}};
  auto m2 = minimal_pizza(only);
  CHECK(m2.size() == 1);
  CHECK(m2.slices[0].beta == E("1"));
}

TEST_CASE("minimal pizza of refined Example 1") {
  AbstractPizza refined{{lin("1", "4", "3", 1, "1/2", "0"), lin("3/2", "3", "2", 1, "1/2", "0"),
                         lin("1", "2", "4", 1, "1/2", "0")}};
  refined.slices[1].beta = E("1");
  refined.slices[0].beta = E("3/2");
  REQUIRE(validate_pizza(refined).empty());
  auto m = minimal_pizza(refined);
  CHECK(equivalent(m, example1()).has_value());
  CHECK(minimal_pizza(example3()) == example3());
}

TEST_CASE("canonical form symmetries") {
  auto h = example3();
  CHECK(canonical_form(h) == canonical_form(rotated(h, 2)));
  CHECK(canonical_form(h) == canonical_form(reversed(h)));
  CHECK(canonical_form(h) == canonical_form(sign_flipped(h)));
  AbstractPizza ex4{{lin("1", "4", "2", 1, "-1/2", "3"), lin("1", "2", "4", 1, "-1/2", "3")}};
  CHECK(canonical_form(example1()) != canonical_form(ex4));
}

TEST_CASE("equivalence witnesses") {
  auto w = equivalent(example1(), sign_flipped(example1()));
  REQUIRE(w);
  CHECK(w->sign_flip);
  AbstractPizza ex4{{lin("1", "4", "2", 1, "-1/2", "3"), lin("1", "2", "4", 1, "-1/2", "3")}};
  CHECK_FALSE(equivalent(example1(), ex4));
  auto rr = rotated(reversed(example3()), 1);
  auto w3 = equivalent(example3(), rr);
  REQUIRE(w3);
  CHECK(apply_witness(example3(), *w3) == rr);
  CHECK_FALSE(equivalent(example1(), example3()));
}

TEST_CASE("generator contract") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed)
    for (std::size_t k = 1; k <= 10; ++k) {
      auto h = generate_random_pizza(seed, k);
      INFO("seed ", seed, " k ", k, " ", to_string(h));
      REQUIRE(h.size() == k);
      REQUIRE(validate_pizza(h).empty());
    }
  auto one = generate_random_pizza(2, 1);
  CHECK(one.slices[0].Q.is_point());
  CHECK(generate_random_pizza(7, 5) == generate_random_pizza(7, 5));
}

TEST_CASE("simplification preserves validity and terminates") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto h = generate_random_pizza(seed, 1 + seed % 10);
    std::size_t steps = 0;
    auto cur = h;
    for (;;) {
      auto ops = find_simplifications(cur);
      if (ops.empty()) break;
      cur = apply_simplification(cur, ops.back());
      REQUIRE(validate_pizza(cur).empty());
      ++steps;
    }
    CHECK(steps + 1 <= h.size());
    auto m = minimal_pizza(h);
    CHECK(minimal_pizza(m) == m);
  }
}

TEST_CASE("refinement property") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto h = generate_random_pizza(seed, 1 + seed % 8);
    auto r = random_refinement(h, seed);
    INFO(to_string(h), " refined ", to_string(r));
    REQUIRE(validate_pizza(r).empty());
    CHECK(canonical_form(minimal_pizza(r)) == canonical_form(minimal_pizza(h)));
  }
}

TEST_CASE("equivalence relation properties") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto h = generate_random_pizza(seed, 1 + seed % 7);
    EquivalenceWitness w{static_cast<std::size_t>(rng() % h.size()), (rng() & 1) != 0, (rng() & 2) != 0};
    auto g = apply_witness(h, w);
    CHECK(equivalent(h, h));
    CHECK(equivalent(h, g));
    CHECK(equivalent(g, h));
    auto w2 = EquivalenceWitness{static_cast<std::size_t>(rng() % h.size()), (rng() & 1) != 0, false};
    auto f = apply_witness(g, w2);
    CHECK(equivalent(h, f));
    CHECK(canonical_form(h) == canonical_form(f));
  }
}
