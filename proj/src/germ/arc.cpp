#include "pizza/germ/arc.hpp"

#include "pizza/error.hpp"

namespace pizza {

namespace {

PuiseuxPoly linear(long c) { return PuiseuxPoly::monomial(AlgebraicReal(c), exact::Rational(1)); }

}  // namespace

Frame frame_from_index(int i) { return static_cast<Frame>(((i % 4) + 4) % 4); }
int frame_index(Frame f) { return static_cast<int>(f); }

int orientation(Frame f) { return (f == Frame::S1 || f == Frame::S4) ? 1 : -1; }

const char* frame_dir(Frame f) {
  switch (f) {
    case Frame::S1: return "+x";
    case Frame::S2: return "+y";
    case Frame::S3: return "-x";
    case Frame::S4: return "-y";
  }
  return "?";
}

Frame parse_frame_dir(const std::string& dir) {
  if (dir == "+x") return Frame::S1;
  if (dir == "+y") return Frame::S2;
  if (dir == "-x") return Frame::S3;
  if (dir == "-y") return Frame::S4;
  throw Error(ErrorCode::InvalidArgument, "unknown arc direction '" + dir + "'");
}

std::pair<double, double> frame_to_plane(Frame f, double u, double v) {
  switch (f) {
    case Frame::S1: return {u, v};
    case Frame::S2: return {v, u};
    case Frame::S3: return {-u, v};
    case Frame::S4: return {v, -u};
  }
  return {0, 0};
}

PuiseuxPoly start_seam(Frame f) { return linear(-orientation(f)); }
PuiseuxPoly end_seam(Frame f) { return linear(orientation(f)); }

bool operator==(const Arc& a, const Arc& b) {
  Arc ca = canonical_arc(a), cb = canonical_arc(b);
  return ca.frame == cb.frame && ca.eta == cb.eta;
}

void validate_arc(const Arc& a) {
  for (const auto& t : a.eta.terms())
    if (t.exp < 1) throw Error(ErrorCode::InvalidArgument, "arc exponent below 1 in " + to_string(a));
  if (a.eta.is_zero()) return;
  const auto& lead = a.eta.leading();
  if (lead.exp > 1) return;
  int cmp = exact::compare(exact::AlgebraicReal(1), lead.coeff.sign() < 0 ? -lead.coeff : lead.coeff);
  if (cmp > 0) return;
  if (cmp < 0) throw Error(ErrorCode::InvalidArgument, "arc leaves its sector: " + to_string(a));
  // |c| = 1: the remainder must point into the sector.
  PuiseuxPoly rest = a.eta - PuiseuxPoly::monomial(lead.coeff, exact::Rational(1));
  if (!rest.is_zero() && rest.leading().coeff.sign() == lead.coeff.sign())
    throw Error(ErrorCode::InvalidArgument, "arc leaves its sector: " + to_string(a));
}

Arc canonical_arc(const Arc& a) {
  if (a.eta == end_seam(a.frame)) {
    Frame next = frame_from_index(frame_index(a.frame) + 1);
    return Arc{next, start_seam(next)};
  }
  return a;
}

Exponent tord(const Arc& a_in, const Arc& b_in) {
  Arc a = canonical_arc(a_in), b = canonical_arc(b_in);
  if (a.frame == b.frame) return (a.eta - b.eta).order();
  int ia = frame_index(a.frame), ib = frame_index(b.frame);
  if ((ia + 1) % 4 == ib) return exact::min((a.eta - end_seam(a.frame)).order(), (b.eta - start_seam(b.frame)).order());
  if ((ib + 1) % 4 == ia) return exact::min((b.eta - end_seam(b.frame)).order(), (a.eta - start_seam(a.frame)).order());
  return Exponent(1);
}

int ccw_compare(const Arc& a_in, const Arc& b_in) {
  Arc a = canonical_arc(a_in), b = canonical_arc(b_in);
  int ia = frame_index(a.frame), ib = frame_index(b.frame);
  if (ia != ib) return ia < ib ? -1 : 1;
  return orientation(a.frame) * exact::germ_compare(a.eta, b.eta);
}

std::pair<double, double> arc_point(const Arc& a, double t) { return frame_to_plane(a.frame, t, a.eta.eval(t)); }

std::string to_string(const Arc& a) { return std::string(frame_dir(a.frame)) + ": v = " + a.eta.str(); }

}  // namespace pizza
