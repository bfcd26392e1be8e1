#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "pizza/exact/rational.hpp"

namespace pizza::exact {

// Element of Q ∪ {∞}: the value space of ord, tord and widths.
class Exponent {
 public:
  Exponent() : value_(0) {}
  Exponent(const Rational& r) : value_(r) {}  // NOLINT(implicit)
  Exponent(long n) : value_(Rational(n)) {}   // NOLINT(implicit)

  static Exponent infinity() {
    Exponent e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  // Throws InvalidArgument for ∞.
  const Rational& value() const;

  friend bool operator==(const Exponent& a, const Exponent& b);
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

  // x + ∞ = ∞; finite + finite as rationals.
  friend Exponent operator+(const Exponent& a, const Exponent& b);
  // ∞ − ∞ is rejected; ∞ − finite = ∞; finite − ∞ is rejected (no −∞ in the value space).
  friend Exponent operator-(const Exponent& a, const Exponent& b);
  // Scaling by a rational: ∞·r = ∞ for r > 0; ∞·0 and ∞·(r<0) are rejected.
  friend Exponent operator*(const Rational& r, const Exponent& e);

  std::string str() const;  // "p/q" or "inf"
  static Exponent parse(std::string_view text);

 private:
  Rational value_;
  bool infinite_ = false;
};

std::strong_ordering exponent_compare(const Exponent& a, const Exponent& b);

inline const Exponent& min(const Exponent& a, const Exponent& b) { return b < a ? b : a; }
inline const Exponent& max(const Exponent& a, const Exponent& b) { return a < b ? b : a; }

}  // namespace pizza::exact
