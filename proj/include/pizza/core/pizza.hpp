#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pizza/exact/exponent.hpp"
#include "pizza/exact/rational.hpp"

namespace pizza {

using exact::Exponent;
using exact::Rational;

// Closed directed segment [a, b] of positive exponents (∞ allowed).
struct DirectedSegment {
  Exponent a, b;

  bool is_point() const { return a == b; }
  bool contains_infinity() const { return a.is_infinite() || b.is_infinite(); }
  DirectedSegment reversed() const { return {b, a}; }
  friend bool operator==(const DirectedSegment&, const DirectedSegment&) = default;
};

// Affine width μ on a slice's segment.
struct AffineWidth {
  enum class Kind { Linear, ConstAtInfinity };
  Kind kind = Kind::Linear;
  Rational m{0}, c{0};  // Linear: μ(q) = m·q + c
  Exponent value;       // ConstAtInfinity: μ(∞) = value

  static AffineWidth linear(const Rational& m, const Rational& c) { return {Kind::Linear, m, c, Exponent()}; }
  static AffineWidth const_at_infinity(const Exponent& v) { return {Kind::ConstAtInfinity, Rational(0), Rational(0), v}; }

  bool is_linear() const { return kind == Kind::Linear; }
  // μ(q); μ(∞) is ∞ for m > 0 and c for m = 0. Throws InvalidSlice for m < 0 at ∞, or for a
  // ConstAtInfinity width evaluated at a finite point.
  Exponent eval(const Exponent& q) const;
  std::string str() const;
  friend bool operator==(const AffineWidth&, const AffineWidth&) = default;
};

struct Slice {
  Exponent beta;
  DirectedSegment Q;
  int sign = 1;  // -1, 0, +1
  AffineWidth mu;

  friend bool operator==(const Slice&, const Slice&) = default;
};

// Cyclic sequence of slices; index arithmetic is mod size().
struct AbstractPizza {
  std::vector<Slice> slices;

  std::size_t size() const { return slices.size(); }
  const Slice& at(std::size_t i) const { return slices[i % slices.size()]; }
  friend bool operator==(const AbstractPizza&, const AbstractPizza&) = default;
};

// One broken axiom. `index` is the slice (or the left slice of a joint).
struct Violation {
  std::size_t index;
  std::string axiom;  // see validate_pizza
  std::string detail;
};

// Axiom ids: "nonempty", "beta-range", "segment-positive", "width-kind", "width-domain",
// "min-equals-beta", "sign-range", "zero-sign", "continuity", "sign-continuity", "beta-one".
std::vector<Violation> validate_pizza(const AbstractPizza& h);
bool is_valid(const AbstractPizza& h);
// Throws InvalidPizza listing the violations.
void require_valid(const AbstractPizza& h);

enum class SimplificationKind { Op1, Op2LeftPoint, Op2RightPoint };
const char* kind_name(SimplificationKind k);

// Merge of slices i and i+1 (cyclically).
struct Simplification {
  std::size_t index;
  SimplificationKind kind;
  friend bool operator==(const Simplification&, const Simplification&) = default;
};

// Applicability tests without validation (callers guarantee validity).
bool op1_applies(const Slice& l, const Slice& r);
bool op2_left_applies(const Slice& l, const Slice& r);
bool op2_right_applies(const Slice& l, const Slice& r);

std::vector<Simplification> find_simplifications(const AbstractPizza& h);
AbstractPizza apply_simplification(const AbstractPizza& h, const Simplification& s);
AbstractPizza minimal_pizza(const AbstractPizza& h);

// Width data that matters for equality: point slices only carry μ(a) = β.
bool same_slice(const Slice& a, const Slice& b);

std::string encode_slice(const Slice& s);
// Minimal encoding over rotations, reversal and sign flip. Slices are encoded as
// "beta;a;b;sign;width" (width "m,c" for non-point segments and "pt" for points), joined by '|'.
// The minimum is taken lexicographically over the byte strings.
std::string canonical_form(const AbstractPizza& h);

struct EquivalenceWitness {
  std::size_t rotation = 0;
  bool reverse = false;
  bool sign_flip = false;
};

// Reverse (slice order and segment directions) first, then rotate so that slice i of the
// result is slice (i + rotation) of the reversed pizza, then flip signs.
AbstractPizza apply_witness(const AbstractPizza& h, const EquivalenceWitness& w);
std::optional<EquivalenceWitness> equivalent(const AbstractPizza& h1, const AbstractPizza& h2);

AbstractPizza reversed(const AbstractPizza& h);
AbstractPizza rotated(const AbstractPizza& h, std::size_t offset);
AbstractPizza sign_flipped(const AbstractPizza& h);

// Deterministic random valid pizza with k slices (k >= 1).
AbstractPizza generate_random_pizza(std::uint64_t seed, std::size_t k);
// Random valid refinement: splits non-point segments with op1-compatible cuts and inserts
// mergeable point slices; minimal_pizza of the result is equivalent to minimal_pizza(h).
AbstractPizza random_refinement(const AbstractPizza& h, std::uint64_t seed);

std::string to_string(const Slice& s);
std::string to_string(const AbstractPizza& h);

}  // namespace pizza
