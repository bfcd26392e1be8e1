#include "pizza/exact/exponent.hpp"

#include "pizza/error.hpp"

namespace pizza::exact {

const Rational& Exponent::value() const {
  if (infinite_) throw Error(ErrorCode::InvalidArgument, "finite value requested from inf");
  return value_;
}

bool operator==(const Exponent& a, const Exponent& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.infinite_ || b.infinite_) return Exponent::infinity();
  return Exponent(Rational(a.value_ + b.value_));
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  if (b.infinite_)
    throw Error(ErrorCode::InvalidArgument, "subtraction of inf from " + a.str());
  if (a.infinite_) return Exponent::infinity();
  return Exponent(Rational(a.value_ - b.value_));
}

Exponent operator*(const Rational& r, const Exponent& e) {
  if (e.infinite_) {
    if (sgn(r) <= 0) throw Error(ErrorCode::InvalidArgument, to_string(r) + " * inf");
    return Exponent::infinity();
  }
  return Exponent(Rational(r * e.value_));
}

std::string Exponent::str() const { return infinite_ ? "inf" : to_string(value_); }

Exponent Exponent::parse(std::string_view text) {
  if (text == "inf" || text == "∞") return infinity();
  return Exponent(parse_rational(text));
}

std::strong_ordering exponent_compare(const Exponent& a, const Exponent& b) { return a <=> b; }

}  // namespace pizza::exact
