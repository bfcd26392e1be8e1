#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pizza/exact/algebraic.hpp"
#include "pizza/exact/puiseux.hpp"

namespace pizza::exact {

// (u exponent, z exponent)
using Monomial2 = std::pair<Rational, unsigned>;

// Finite sum of c·u^i·z^j with rational i and integer j >= 0.
class GenPoly2 {
 public:
  GenPoly2() = default;
  static GenPoly2 constant(const AlgebraicReal& c);
  static GenPoly2 u_power(const Rational& e, const AlgebraicReal& c = AlgebraicReal(1));
  static GenPoly2 z();
  // Embeds a Puiseux polynomial in u as a z-free element.
  static GenPoly2 from_puiseux(const PuiseuxPoly& p);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial2, AlgebraicReal>& terms() const { return terms_; }
  void add_term(const Rational& i, unsigned j, const AlgebraicReal& c);

  friend GenPoly2 operator+(const GenPoly2& a, const GenPoly2& b);
  friend GenPoly2 operator-(const GenPoly2& a, const GenPoly2& b);
  friend GenPoly2 operator*(const GenPoly2& a, const GenPoly2& b);
  GenPoly2 operator-() const;
  GenPoly2 pow(unsigned n) const;

  unsigned z_degree() const;
  unsigned min_z() const;
  bool is_z_free() const;

  // F(u, c·u^alpha + z).
  GenPoly2 shift_z(const AlgebraicReal& c, const Rational& alpha) const;
  // F(u, p(u)) as a Puiseux polynomial.
  PuiseuxPoly substitute(const PuiseuxPoly& p) const;

  // Initial form along z = c·u^alpha: the least value of i + alpha·j over the support and
  // the polynomial in c collecting the terms attaining it (index = j).
  struct Initial {
    Rational value;
    APoly poly;
  };
  Initial initial(const Rational& alpha) const;
  // The monomial minimizing i + alpha·j when it is unique (alpha not a slope of the polygon).
  Monomial2 governing(const Rational& alpha) const;

  std::string str() const;

 private:
  std::map<Monomial2, AlgebraicReal> terms_;
};

struct NewtonEdge {
  Rational slope;         // Δu / Δ(−z), positive
  std::size_t from, to;   // vertex indices, from has the larger z exponent
  APoly edge_poly;        // Σ a·c^(j − j_to) over monomials on the edge
};

struct NewtonPolygon {
  std::vector<Monomial2> vertices;  // decreasing z exponent
  std::vector<NewtonEdge> edges;
};

// Lower-left convex hull from the monomial of least u exponent to that of least z exponent.
NewtonPolygon newton_polygon(const GenPoly2& f);

}  // namespace pizza::exact
